#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boardmagic/errors.hpp"
#include "boardmagic/matrix.hpp"

namespace boardmagic {

/// A (p,q,r)-board: three groups of rows spanning a p x q, a p x r and a
/// q x r rectangle, pq + pr + qr unit squares in total.
struct Board {
    int p = 1;
    int q = 1;
    int r = 1;

    std::int64_t total_squares() const {
        return static_cast<std::int64_t>(p) * q + static_cast<std::int64_t>(p) * r +
               static_cast<std::int64_t>(q) * r;
    }
    bool valid() const { return p >= 1 && q >= 1 && r >= 1; }
    std::array<int, 3> dims() const { return {p, q, r}; }

    friend bool operator==(const Board& a, const Board& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

/// A bijective assignment of 1..pq+pr+qr to the three rectangles.
struct Design {
    Board board;
    IntMatrix pq;  // p x q
    IntMatrix pr;  // p x r
    IntMatrix qr;  // q x r
};

/// Row-sum vectors of the three groups. `constants` is set only when each of
/// x, y, z is internally constant.
struct SumProfile {
    std::vector<std::int64_t> x;  // length p
    std::vector<std::int64_t> y;  // length q
    std::vector<std::int64_t> z;  // length r
    std::optional<std::array<std::int64_t, 3>> constants;
};

enum class DesignKind { NotConstant, TriMagic, BiMagic, Magic };

/// The three target classes a caller can ask for.
enum class MagicClass { Tri, Bi, Magic };

struct Classification {
    DesignKind kind = DesignKind::NotConstant;
    std::optional<std::array<std::int64_t, 3>> constants;  // (c1,c2,c3) when constant

    bool is(MagicClass cls) const {
        switch (cls) {
            case MagicClass::Tri: return kind == DesignKind::TriMagic;
            case MagicClass::Bi: return kind == DesignKind::BiMagic;
            case MagicClass::Magic: return kind == DesignKind::Magic;
        }
        return false;
    }
};

const char* to_string(DesignKind k);
const char* to_string(MagicClass c);
std::optional<MagicClass> magic_class_from_string(const std::string& s);

/// Structural problems of a Design, empty when valid. Messages name the
/// offending matrix cell, e.g. "qr[1][0]".
std::vector<std::string> validate(const Design& d);

/// Throws InvalidDesign when validate() reports anything.
SumProfile sum_profile(const Design& d);

Classification classify(const Design& d);

/// Residuals of the six label-sum identities every magic design satisfies:
/// s(PQ)+s(PR)-mp, s(PQ)+s(QR)-mq, s(PR)+s(QR)-mr and the three pairwise
/// differences against m(q-p), m(r-p), m(r-q).
struct MagicIdentityCheck {
    bool all_zero = false;
    std::array<std::int64_t, 6> residuals{};
};

/// Requires classify(d) == Magic, otherwise throws NotMagic.
MagicIdentityCheck magic_identities(const Design& d);

/// True when the sorted triple (a,b,c) satisfies a^2 + b^2 = c^2.
bool is_pythagorean(const std::array<std::int64_t, 3>& c);

/// Role permutation: entry i names which old role (0=P,1=Q,2=R) becomes the
/// new role i. Matrices are transposed as needed; the sum profile of the
/// result is the transported profile of the input.
using RolePermutation = std::array<int, 3>;

Design permute_design(const Design& d, const RolePermutation& roles);

/// Permutation that sorts the board's dimensions ascending, and its inverse.
RolePermutation sorting_permutation(const Board& b);
RolePermutation inverse(const RolePermutation& roles);

}  // namespace boardmagic
