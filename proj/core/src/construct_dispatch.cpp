#include <map>
#include <sstream>

#include "boardmagic/construct.hpp"
#include "boardmagic/feasibility.hpp"

namespace boardmagic {

namespace {

enum class TriRoute {
    ladder,
    fix_122,
    fix_133,
    fix_233,
    corner_trim,
    stacked,
    two_row,
    block_product,
    two_two,
    merge_pq,
    merge_pr,
    merge_qr,
    three_rect,
    open_flat_equal_pair,
    open_odd_pair_even_single,
    open_even_single_odd_pair,
    open_two_even,
    open_generic,
};

// dims sorted ascending
TriRoute tri_route(int p, int q, int r) {
    if (p == 1) {
        if (q == 1) return TriRoute::ladder;
        if (q == 2 && r == 2) return TriRoute::fix_122;
        if (q == 3 && r == 3) return TriRoute::fix_133;
        if (q == r) return TriRoute::open_flat_equal_pair;
        if (q % 2 == r % 2) return TriRoute::corner_trim;
        if (q == 2) return TriRoute::two_row;
        if (q % 2 == 1) return TriRoute::stacked;
        return TriRoute::block_product;
    }
    if (p == 2 && q == 2) return TriRoute::two_two;
    if (p == 2 && q == 3 && r == 3) return TriRoute::fix_233;
    if (p % 2 == q % 2 && q % 2 == r % 2) return TriRoute::three_rect;
    int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (evens == 1) {
        if (r % 2 == 0) return p == q ? TriRoute::open_odd_pair_even_single : TriRoute::merge_pq;
        if (q % 2 == 0) return TriRoute::merge_pr;
        return q == r ? TriRoute::open_even_single_odd_pair : TriRoute::merge_qr;
    }
    return TriRoute::open_two_even;
}

enum class BiRoute {
    ladder_split,
    impossible_mod4,
    corner_trim_equal,
    fix_123,
    two_two_even,
    block_squares,
    circulant,
    square_rect,
    open_generic,
};

BiRoute bi_route(int p, int q, int r) {
    if (p == 1 && q == 1) return r % 4 == 1 ? BiRoute::impossible_mod4 : BiRoute::ladder_split;
    if (p == 1 && q == r) return BiRoute::corner_trim_equal;
    if (p == 1 && q == 2 && r == 3) return BiRoute::fix_123;
    if (p == 1) return BiRoute::open_generic;
    if (p == 2 && q == 2) return r % 2 == 0 ? BiRoute::two_two_even : BiRoute::open_generic;
    if (p == q && q == r) return p % 2 == 0 ? BiRoute::block_squares : BiRoute::circulant;
    if (q == r && q >= 3 && p % 2 == 0) return BiRoute::square_rect;  // pair above
    if (p == q && p >= 3 && r % 2 == 0) return BiRoute::square_rect;  // pair below
    return BiRoute::open_generic;
}

enum class MagicRoute {
    explicit_small,
    block_squares,
    circulant,
    impossible_flat,
    impossible_proportional,
    impossible_divisibility,
    open_generic,
};

MagicRoute magic_route(int p, int q, int r) {
    if (p == 1) return MagicRoute::impossible_flat;
    if (p == q && q == r) {
        if (p % 2 == 1) return MagicRoute::circulant;
        return p <= 4 ? MagicRoute::explicit_small : MagicRoute::block_squares;
    }
    if (p == q && r % p == 0 && r > p) return MagicRoute::impossible_proportional;
    Board b{p, q, r};
    if (!magic_constant(b)) return MagicRoute::impossible_divisibility;
    return MagicRoute::open_generic;
}

struct RuleText {
    const char* rule;
    const char* statement;
};

RuleText tri_text(TriRoute r) {
    switch (r) {
        case TriRoute::ladder: return {"ladder", "(1,1,r): ascending strip against its reversal"};
        case TriRoute::fix_122: return {"adhoc-1-2-2", "(1,2,2): settled by a stored design"};
        case TriRoute::fix_133: return {"adhoc-1-3-3", "(1,3,3): settled by a stored design"};
        case TriRoute::fix_233: return {"adhoc-2-3-3", "(2,3,3): settled by a stored design"};
        case TriRoute::corner_trim:
            return {"corner-trim",
                    "(1,q,r), q = r (mod 2), q < r: corner-deleted magic rectangle"};
        case TriRoute::stacked:
            return {"strip-stack", "(1,q,r), odd q >= 3, even r: stacked half-strips"};
        case TriRoute::two_row:
            return {"two-row-family", "(1,2,r), odd r: explicit paired-row family"};
        case TriRoute::block_product:
            return {"block-product", "(1,q,r), even q >= 4, odd r: rectangle-expanded blocks"};
        case TriRoute::two_two: return {"two-two-family", "(2,2,r): explicit residue family"};
        case TriRoute::merge_pq:
            return {"merge-pq", "(odd p < odd q < even r): rectangle on merged p+q rows"};
        case TriRoute::merge_pr:
            return {"merge-pr", "(odd p < even q < odd r): rectangle on merged p+r rows"};
        case TriRoute::merge_qr:
            return {"merge-qr", "(even p < odd q < odd r): rectangle on merged q+r columns"};
        case TriRoute::three_rect:
            return {"three-rect", "same parity, (p,q) != (2,2): three stacked rectangles"};
        case TriRoute::open_flat_equal_pair:
            return {"open-flat-equal-pair", "tri-magic (1,t,t) with t >= 4 is unresolved"};
        case TriRoute::open_odd_pair_even_single:
            return {"open-odd-pair-even-single",
                    "tri-magic (t,t,e), odd t >= 3, even e > t, is unresolved"};
        case TriRoute::open_even_single_odd_pair:
            return {"open-even-single-odd-pair",
                    "tri-magic (e,t,t), even e >= 2, odd t > e, is unresolved"};
        case TriRoute::open_two_even:
            return {"open-two-even", "tri-magic with exactly two even sides is unresolved"};
        case TriRoute::open_generic: return {"unsettled", "no known construction applies"};
    }
    return {"?", "?"};
}

RuleText bi_text(BiRoute r) {
    switch (r) {
        case BiRoute::ladder_split:
            return {"ladder-split", "(1,1,r), r != 1 (mod 4): balanced split of [1,2r]"};
        case BiRoute::impossible_mod4:
            return {"split-parity",
                    "(1,1,r) admits a bi-magic design only when r != 1 (mod 4)"};
        case BiRoute::corner_trim_equal:
            return {"corner-trim-equal", "(1,q,q): corner-deleted magic rectangle"};
        case BiRoute::fix_123: return {"adhoc-1-2-3", "(1,2,3): settled by a stored design"};
        case BiRoute::two_two_even:
            return {"two-two-even", "(2,2,r), even r: explicit residue family"};
        case BiRoute::block_squares:
            return {"block-squares", "(p,p,p), even p: squares substituted into a 2x2 seed"};
        case BiRoute::circulant:
            return {"circulant-offset",
                    "(p,p,p), odd p: tripled square minus circulant offsets, diagonal shifted"};
        case BiRoute::square_rect:
            return {"square-plus-rect",
                    "two equal sides and an even third: square plus merged rectangle"};
        case BiRoute::open_generic: return {"unsettled", "no known construction applies"};
    }
    return {"?", "?"};
}

RuleText magic_text(MagicRoute r) {
    switch (r) {
        case MagicRoute::explicit_small: return {"stored-small", "(p,p,p), p in {2,4}: stored designs"};
        case MagicRoute::block_squares:
            return {"block-squares-magic",
                    "(p,p,p), even p >= 6: squares substituted into the 2x2 seed"};
        case MagicRoute::circulant:
            return {"circulant-exact",
                    "(p,p,p), odd p: tripled square minus circulant offsets"};
        case MagicRoute::impossible_flat:
            return {"flat-board", "no magic design exists on (1,q,r) boards"};
        case MagicRoute::impossible_proportional:
            return {"proportional-sides",
                    "no magic design on (p,p,pr) boards with r >= 2"};
        case MagicRoute::impossible_divisibility:
            return {"sum-divisibility",
                    "p+q+r must divide T(T+1) for a magic design to exist"};
        case MagicRoute::open_generic: return {"unsettled", "no known construction applies"};
    }
    return {"?", "?"};
}

Design fixture_122() {
    Design d;
    d.board = {1, 2, 2};
    d.pq = IntMatrix{{6, 8}};
    d.pr = IntMatrix{{1, 5}};
    d.qr = IntMatrix{{7, 2}, {3, 4}};
    return d;
}

Design fixture_133() {
    Design d;
    d.board = {1, 3, 3};
    d.pq = IntMatrix{{10, 13, 7}};
    d.pr = IntMatrix{{12, 4, 8}};
    d.qr = IntMatrix{{1, 6, 15}, {3, 11, 5}, {14, 9, 2}};
    return d;
}

Design fixture_233() {
    Design d;
    d.board = {2, 3, 3};
    d.pq = IntMatrix{{14, 11, 12}, {13, 15, 10}};
    d.pr = IntMatrix{{21, 17, 18}, {16, 19, 20}};
    d.qr = IntMatrix{{4, 2, 7}, {3, 5, 6}, {8, 9, 1}};
    return d;
}

Design fixture_123() {
    Design d;
    d.board = {1, 2, 3};
    d.pq = IntMatrix{{1, 2}};
    d.pr = IntMatrix{{5, 11, 4}};
    d.qr = IntMatrix{{6, 7, 9}, {10, 3, 8}};
    return d;
}

Design fixture_112_alt() {
    Design d;
    d.board = {1, 1, 2};
    d.pq = IntMatrix{{3}};
    d.pr = IntMatrix{{2, 5}};
    d.qr = IntMatrix{{4, 1}};
    return d;
}

Design checked(Design d, MagicClass cls, const char* who) {
    auto issues = validate(d);
    if (!issues.empty()) {
        std::ostringstream os;
        os << who << " produced an invalid design: " << issues.front();
        throw std::logic_error(os.str());
    }
    Classification c = classify(d);
    if (!c.is(cls)) {
        std::ostringstream os;
        os << who << " produced a " << to_string(c.kind) << " design, expected "
           << to_string(cls) << "-magic class";
        throw std::logic_error(os.str());
    }
    return d;
}

[[noreturn]] void throw_unavailable(Coverage::Kind kind, const RuleText& text) {
    throw ConstructError(kind == Coverage::Kind::impossible
                             ? ConstructError::Kind::proven_impossible
                             : ConstructError::Kind::not_covered,
                         text.rule, text.statement);
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"bimagic-1-2-3", "trimagic-1-1-2-alt", "trimagic-1-2-2", "trimagic-1-3-3",
            "trimagic-2-3-3"};
}

Design fixture(const std::string& name) {
    if (name == "bimagic-1-2-3") return fixture_123();
    if (name == "trimagic-1-1-2-alt") return fixture_112_alt();
    if (name == "trimagic-1-2-2") return fixture_122();
    if (name == "trimagic-1-3-3") return fixture_133();
    if (name == "trimagic-2-3-3") return fixture_233();
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

Coverage probe(MagicClass cls, const Board& b) {
    if (!b.valid()) throw std::invalid_argument("board dimensions must be >= 1");
    auto perm = sorting_permutation(b);
    auto dims = b.dims();
    int p = dims[perm[0]], q = dims[perm[1]], r = dims[perm[2]];
    Coverage cov;
    switch (cls) {
        case MagicClass::Tri: {
            TriRoute route = tri_route(p, q, r);
            RuleText text = tri_text(route);
            cov.rule = text.rule;
            cov.statement = text.statement;
            switch (route) {
                case TriRoute::open_flat_equal_pair:
                case TriRoute::open_odd_pair_even_single:
                case TriRoute::open_even_single_odd_pair:
                case TriRoute::open_two_even:
                case TriRoute::open_generic: cov.kind = Coverage::Kind::open; break;
                default: cov.kind = Coverage::Kind::covered; break;
            }
            break;
        }
        case MagicClass::Bi: {
            BiRoute route = bi_route(p, q, r);
            RuleText text = bi_text(route);
            cov.rule = text.rule;
            cov.statement = text.statement;
            cov.kind = route == BiRoute::impossible_mod4 ? Coverage::Kind::impossible
                       : route == BiRoute::open_generic  ? Coverage::Kind::open
                                                         : Coverage::Kind::covered;
            break;
        }
        case MagicClass::Magic: {
            MagicRoute route = magic_route(p, q, r);
            RuleText text = magic_text(route);
            cov.rule = text.rule;
            cov.statement = text.statement;
            switch (route) {
                case MagicRoute::impossible_flat:
                case MagicRoute::impossible_proportional:
                case MagicRoute::impossible_divisibility:
                    cov.kind = Coverage::Kind::impossible;
                    break;
                case MagicRoute::open_generic: cov.kind = Coverage::Kind::open; break;
                default: cov.kind = Coverage::Kind::covered; break;
            }
            break;
        }
    }
    return cov;
}

namespace {

Design build_tri_sorted(int p, int q, int r) {
    TriRoute route = tri_route(p, q, r);
    switch (route) {
        case TriRoute::ladder: return ladder_design(r);
        case TriRoute::fix_122: return fixture_122();
        case TriRoute::fix_133: return fixture_133();
        case TriRoute::fix_233: return fixture_233();
        case TriRoute::corner_trim: return corner_trim_design(q, r);
        case TriRoute::stacked: {
            Design d = stacked_design((q - 1) / 2, r / 2, false);
            Classification c = classify(d);
            if (c.kind == DesignKind::TriMagic) return d;
            // equal row/column constants: use the translated label blocks
            return stacked_design((q - 1) / 2, r / 2, true);
        }
        case TriRoute::two_row: return two_row_family_design(r);
        case TriRoute::block_product: return block_product_design(q / 2, (r + 1) / 2);
        case TriRoute::two_two: return two_two_design(r);
        case TriRoute::merge_pq: return merge_pq_design(p, q, r);
        case TriRoute::merge_pr: return merge_pr_design(p, q, r);
        case TriRoute::merge_qr: return merge_qr_design(p, q, r);
        case TriRoute::three_rect: {
            Design d = three_rect_design(p, q, r, 0);
            if (classify(d).kind == DesignKind::TriMagic) return d;
            Design alt = three_rect_design(p, q, r, 1);
            if (classify(alt).kind != DesignKind::TriMagic)
                throw std::logic_error("neither three-rectangle filling separated the constants");
            return alt;
        }
        default: throw_unavailable(Coverage::Kind::open, tri_text(route));
    }
}

Design build_bi_sorted(int p, int q, int r) {
    BiRoute route = bi_route(p, q, r);
    switch (route) {
        case BiRoute::ladder_split: return ladder_split_design(r);
        case BiRoute::impossible_mod4:
            throw_unavailable(Coverage::Kind::impossible, bi_text(route));
        case BiRoute::corner_trim_equal: return corner_trim_design(q, r);
        case BiRoute::fix_123: return fixture_123();
        case BiRoute::two_two_even: return two_two_even_bi_design(r);
        case BiRoute::block_squares: return block_squares_bi_design(p);
        case BiRoute::circulant: return circulant_bi_design(p);
        case BiRoute::square_rect: {
            // orient the equal pair as the first two roles
            if (q == r && p % 2 == 0) {
                Design d = square_merged_rect_design(q, p);  // board (q,q,p)
                return permute_design(d, {2, 0, 1});         // back to (p,q,q)
            }
            return square_merged_rect_design(p, r);
        }
        default: throw_unavailable(Coverage::Kind::open, bi_text(route));
    }
}

Design build_magic_sorted(int p, int q, int r) {
    MagicRoute route = magic_route(p, q, r);
    switch (route) {
        case MagicRoute::explicit_small: return block_squares_magic_design(p);
        case MagicRoute::block_squares: return block_squares_magic_design(p);
        case MagicRoute::circulant: return circulant_magic_design(p);
        case MagicRoute::open_generic: throw_unavailable(Coverage::Kind::open, magic_text(route));
        default: throw_unavailable(Coverage::Kind::impossible, magic_text(route));
    }
}

Design construct_sorted(MagicClass cls, int p, int q, int r) {
    switch (cls) {
        case MagicClass::Tri: return checked(build_tri_sorted(p, q, r), cls, "tri constructor");
        case MagicClass::Bi: return checked(build_bi_sorted(p, q, r), cls, "bi constructor");
        case MagicClass::Magic:
            return checked(build_magic_sorted(p, q, r), cls, "magic constructor");
    }
    throw std::invalid_argument("bad class");
}

}  // namespace

Design construct(MagicClass cls, const Board& b) {
    if (!b.valid()) throw std::invalid_argument("board dimensions must be >= 1");
    auto perm = sorting_permutation(b);
    auto dims = b.dims();
    Design sorted = construct_sorted(cls, dims[perm[0]], dims[perm[1]], dims[perm[2]]);
    Design out = permute_design(sorted, inverse(perm));
    if (!(out.board == b)) throw std::logic_error("permutation transport failed");
    return out;
}

Design construct_tri(const Board& b) { return construct(MagicClass::Tri, b); }
Design construct_bi(const Board& b) { return construct(MagicClass::Bi, b); }
Design construct_magic(const Board& b) { return construct(MagicClass::Magic, b); }

}  // namespace boardmagic
