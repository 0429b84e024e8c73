#include "boardmagic/feasibility.hpp"

#include <stdexcept>

#include "boardmagic/construct.hpp"

namespace boardmagic {

bool magic_divisibility_ok(const Board& b) {
    if (!b.valid()) throw std::invalid_argument("board dimensions must be >= 1");
    const std::int64_t t = b.total_squares();
    return (t * (t + 1)) % (b.p + b.q + b.r) == 0;
}

std::optional<std::int64_t> magic_constant(const Board& b) {
    if (!b.valid()) throw std::invalid_argument("board dimensions must be >= 1");
    const std::int64_t t = b.total_squares();
    const std::int64_t sides = b.p + b.q + b.r;
    if ((t * (t + 1)) % sides != 0) return std::nullopt;
    return t * (t + 1) / sides;
}

KnownStatus known_status(const Board& b, MagicClass cls) {
    Coverage cov = probe(cls, b);
    KnownStatus st;
    switch (cov.kind) {
        case Coverage::Kind::covered:
            st.verdict = Verdict::ProvenYes;
            st.rule = cov.rule;
            st.statement = cov.statement;
            break;
        case Coverage::Kind::impossible:
            st.verdict = Verdict::ProvenNo;
            st.rule = cov.rule;
            st.statement = cov.statement;
            break;
        case Coverage::Kind::open:
            st.verdict = Verdict::Open;
            st.statement = cov.statement;
            break;
    }
    return st;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::ProvenYes: return "proven-yes";
        case Verdict::ProvenNo: return "proven-no";
        case Verdict::Open: return "open";
    }
    return "?";
}

}  // namespace boardmagic
