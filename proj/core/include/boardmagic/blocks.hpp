#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boardmagic/errors.hpp"
#include "boardmagic/matrix.hpp"

namespace boardmagic {

/// An h x k arrangement of the interval [offset+1, offset+hk] whose rows all
/// sum to k(hk+1)/2 + k*offset and whose columns all sum to h(hk+1)/2 + h*offset.
struct MagicRectangle {
    int h = 0;
    int k = 0;
    std::int64_t offset = 0;
    IntMatrix entries;

    std::int64_t row_constant() const {
        std::int64_t n = static_cast<std::int64_t>(h) * k;
        return k * (n + 1) / 2 + k * offset;
    }
    std::int64_t col_constant() const {
        std::int64_t n = static_cast<std::int64_t>(h) * k;
        return h * (n + 1) / 2 + h * offset;
    }
};

/// Empty when the rectangle satisfies all of its invariants.
std::vector<std::string> verify_rectangle(const MagicRectangle& m);

/// n = 1 or n >= 3; throws BlockError(no_such_square) for n = 2.
MagicRectangle magic_square(int n, std::int64_t offset = 0);

/// Exists for h = k = 1; h = k >= 3; and h != k with h ≡ k (mod 2), h,k >= 2,
/// (h,k) != (2,2). Everything else throws a BlockError describing why.
MagicRectangle magic_rectangle(int h, int k, std::int64_t offset = 0);

/// Row/column swaps bringing the maximum entry to position (0,0).
MagicRectangle pin_corner_max(const MagicRectangle& m);

/// For an h x 2 rectangle over [0, 2h-1]: swaps so entry 0 lands at (0,0),
/// which forces 2h-1 at (0,1) because each row sums to 2h-1.
MagicRectangle pin_corner_zero(const MagicRectangle& m);

}  // namespace boardmagic
