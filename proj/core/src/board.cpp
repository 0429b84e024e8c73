#include "boardmagic/board.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace boardmagic {

const char* to_string(DesignKind k) {
    switch (k) {
        case DesignKind::NotConstant: return "not-constant";
        case DesignKind::TriMagic: return "tri-magic";
        case DesignKind::BiMagic: return "bi-magic";
        case DesignKind::Magic: return "magic";
    }
    return "?";
}

const char* to_string(MagicClass c) {
    switch (c) {
        case MagicClass::Tri: return "tri";
        case MagicClass::Bi: return "bi";
        case MagicClass::Magic: return "magic";
    }
    return "?";
}

std::optional<MagicClass> magic_class_from_string(const std::string& s) {
    if (s == "tri" || s == "tri-magic") return MagicClass::Tri;
    if (s == "bi" || s == "bi-magic") return MagicClass::Bi;
    if (s == "magic") return MagicClass::Magic;
    return std::nullopt;
}

namespace {

std::string cell_name(const char* m, int i, int j) {
    std::ostringstream os;
    os << m << "[" << i << "][" << j << "]";
    return os.str();
}

void check_labels(const IntMatrix& m, const char* name, std::int64_t total,
                  std::vector<std::string>& first_seen_at, std::vector<std::string>& issues) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::int64_t v = m.at(i, j);
            if (v < 1 || v > total) {
                std::ostringstream os;
                os << "label " << v << " at " << cell_name(name, i, j) << " outside [1, " << total
                   << "]";
                issues.push_back(os.str());
                continue;
            }
            auto& seen = first_seen_at[static_cast<std::size_t>(v)];
            if (!seen.empty()) {
                std::ostringstream os;
                os << "bijection violated: label " << v << " appears twice (at " << seen
                   << " and " << cell_name(name, i, j) << ")";
                issues.push_back(os.str());
            } else {
                seen = cell_name(name, i, j);
            }
        }
    }
}

bool constant_vector(const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x == v.front(); });
}

}  // namespace

std::vector<std::string> validate(const Design& d) {
    std::vector<std::string> issues;
    if (!d.board.valid()) {
        issues.push_back("board dimensions must all be >= 1");
        return issues;
    }
    const Board& b = d.board;
    auto check_dims = [&](const IntMatrix& m, const char* name, int er, int ec) {
        if (m.rows() != er || m.cols() != ec) {
            std::ostringstream os;
            os << name << " must be " << er << "x" << ec << ", got " << m.rows() << "x"
               << m.cols();
            issues.push_back(os.str());
            return false;
        }
        return true;
    };
    bool dims_ok = check_dims(d.pq, "pq", b.p, b.q);
    dims_ok &= check_dims(d.pr, "pr", b.p, b.r);
    dims_ok &= check_dims(d.qr, "qr", b.q, b.r);
    if (!dims_ok) return issues;

    const std::int64_t total = b.total_squares();
    std::vector<std::string> first_seen_at(static_cast<std::size_t>(total) + 1);
    check_labels(d.pq, "pq", total, first_seen_at, issues);
    check_labels(d.pr, "pr", total, first_seen_at, issues);
    check_labels(d.qr, "qr", total, first_seen_at, issues);
    if (issues.empty()) {
        for (std::int64_t v = 1; v <= total; ++v) {
            if (first_seen_at[static_cast<std::size_t>(v)].empty()) {
                std::ostringstream os;
                os << "label " << v << " missing";
                issues.push_back(os.str());
            }
        }
    }
    return issues;
}

SumProfile sum_profile(const Design& d) {
    auto issues = validate(d);
    if (!issues.empty()) throw InvalidDesign(issues.front());

    SumProfile prof;
    const Board& b = d.board;
    prof.x.resize(b.p);
    prof.y.resize(b.q);
    prof.z.resize(b.r);
    for (int i = 0; i < b.p; ++i) prof.x[i] = d.pq.row_sum(i) + d.pr.row_sum(i);
    for (int j = 0; j < b.q; ++j) prof.y[j] = d.pq.col_sum(j) + d.qr.row_sum(j);
    for (int k = 0; k < b.r; ++k) prof.z[k] = d.pr.col_sum(k) + d.qr.col_sum(k);
    if (constant_vector(prof.x) && constant_vector(prof.y) && constant_vector(prof.z))
        prof.constants = {{prof.x.front(), prof.y.front(), prof.z.front()}};
    return prof;
}

Classification classify(const Design& d) {
    SumProfile prof = sum_profile(d);
    Classification c;
    if (!prof.constants) {
        c.kind = DesignKind::NotConstant;
        return c;
    }
    c.constants = prof.constants;
    const auto& v = *prof.constants;
    std::set<std::int64_t> distinct(v.begin(), v.end());
    switch (distinct.size()) {
        case 1: c.kind = DesignKind::Magic; break;
        case 2: c.kind = DesignKind::BiMagic; break;
        default: c.kind = DesignKind::TriMagic; break;
    }
    return c;
}

MagicIdentityCheck magic_identities(const Design& d) {
    Classification c = classify(d);
    if (c.kind != DesignKind::Magic)
        throw NotMagic(std::string("magic identities require a magic design, got ") +
                       to_string(c.kind));
    const std::int64_t m = (*c.constants)[0];
    const Board& b = d.board;
    const std::int64_t spq = d.pq.total();
    const std::int64_t spr = d.pr.total();
    const std::int64_t sqr = d.qr.total();
    MagicIdentityCheck chk;
    chk.residuals = {
        spq + spr - m * b.p,
        spq + sqr - m * b.q,
        spr + sqr - m * b.r,
        (sqr - spr) - m * (b.q - b.p),
        (sqr - spq) - m * (b.r - b.p),
        (spr - spq) - m * (b.r - b.q),
    };
    chk.all_zero = std::all_of(chk.residuals.begin(), chk.residuals.end(),
                               [](std::int64_t v) { return v == 0; });
    return chk;
}

bool is_pythagorean(const std::array<std::int64_t, 3>& c) {
    std::array<std::int64_t, 3> s = c;
    std::sort(s.begin(), s.end());
    if (s[0] <= 0) return false;
    return s[0] * s[0] + s[1] * s[1] == s[2] * s[2];
}

namespace {

// Matrix between old roles a and b of d, oriented rows=a, cols=b.
IntMatrix matrix_between(const Design& d, int a, int b) {
    if (a == 0 && b == 1) return d.pq;
    if (a == 1 && b == 0) return d.pq.transposed();
    if (a == 0 && b == 2) return d.pr;
    if (a == 2 && b == 0) return d.pr.transposed();
    if (a == 1 && b == 2) return d.qr;
    if (a == 2 && b == 1) return d.qr.transposed();
    throw std::invalid_argument("roles must be distinct");
}

}  // namespace

Design permute_design(const Design& d, const RolePermutation& roles) {
    std::array<bool, 3> seen{};
    for (int v : roles) {
        if (v < 0 || v > 2 || seen[v]) throw std::invalid_argument("not a role permutation");
        seen[v] = true;
    }
    auto dims = d.board.dims();
    Design out;
    out.board = Board{dims[roles[0]], dims[roles[1]], dims[roles[2]]};
    out.pq = matrix_between(d, roles[0], roles[1]);
    out.pr = matrix_between(d, roles[0], roles[2]);
    out.qr = matrix_between(d, roles[1], roles[2]);
    return out;
}

RolePermutation sorting_permutation(const Board& b) {
    RolePermutation perm = {0, 1, 2};
    auto dims = b.dims();
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int c) { return dims[a] < dims[c]; });
    return perm;
}

RolePermutation inverse(const RolePermutation& roles) {
    RolePermutation inv{};
    for (int i = 0; i < 3; ++i) inv[roles[i]] = i;
    return inv;
}

}  // namespace boardmagic
