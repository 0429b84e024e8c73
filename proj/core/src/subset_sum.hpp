#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace boardmagic::detail {

/// Subset of `items` (all positive) whose sum equals `target`. Returns the
/// chosen indices, or nullopt. Bitset DP with per-item snapshots so the
/// reconstruction is deterministic (prefers leaving later items unused).
inline std::optional<std::vector<int>> subset_with_sum(const std::vector<std::int64_t>& items,
                                                       std::int64_t target) {
    if (target < 0) return std::nullopt;
    std::int64_t total = 0;
    for (auto v : items) total += v;
    if (target > total) return std::nullopt;

    const std::size_t width = static_cast<std::size_t>(total) + 1;
    const std::size_t words = (width + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(items.size() + 1,
                                                  std::vector<std::uint64_t>(words, 0));
    reach[0][0] = 1;  // sum 0
    auto test = [&](const std::vector<std::uint64_t>& bs, std::int64_t s) {
        return (bs[static_cast<std::size_t>(s) >> 6] >> (s & 63)) & 1u;
    };
    for (std::size_t t = 0; t < items.size(); ++t) {
        const auto shift = static_cast<std::size_t>(items[t]);
        const auto& prev = reach[t];
        auto& cur = reach[t + 1];
        cur = prev;
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = shift & 63;
        if (bit_shift == 0) {
            for (std::size_t w = words; w-- > word_shift;) cur[w] |= prev[w - word_shift];
        } else {
            for (std::size_t w = words; w-- > word_shift;) {
                std::uint64_t v = prev[w - word_shift] << bit_shift;
                if (w > word_shift)
                    v |= prev[w - word_shift - 1] >> (64 - bit_shift);
                cur[w] |= v;
            }
        }
    }
    if (!test(reach[items.size()], target)) return std::nullopt;

    std::vector<int> chosen;
    std::int64_t rem = target;
    for (std::size_t t = items.size(); t-- > 0;) {
        if (test(reach[t], rem)) continue;  // item t not needed
        chosen.push_back(static_cast<int>(t));
        rem -= items[t];
    }
    return chosen;
}

}  // namespace boardmagic::detail
