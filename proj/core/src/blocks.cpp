#include "boardmagic/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "subset_sum.hpp"

namespace boardmagic {

namespace {

using detail::subset_with_sum;

// ---------------------------------------------------------------- squares

IntMatrix square_odd(int n) {
    IntMatrix m(n, n, 0);
    int i = 0, j = n / 2;
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(n) * n; ++v) {
        m.at(i, j) = v;
        int ni = (i + n - 1) % n, nj = (j + 1) % n;
        if (m.at(ni, nj) != 0) {
            ni = (i + 1) % n;
            nj = j;
        }
        i = ni;
        j = nj;
    }
    return m;
}

IntMatrix square_doubly_even(int n) {
    IntMatrix m(n, n);
    const std::int64_t nn = static_cast<std::int64_t>(n) * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = static_cast<std::int64_t>(i) * n + j + 1;
            int a = i % 4, b = j % 4;
            bool corner_block = (a == 0 || a == 3) && (b == 0 || b == 3);
            bool center_block = (a == 1 || a == 2) && (b == 1 || b == 2);
            m.at(i, j) = (corner_block || center_block) ? nn + 1 - v : v;
        }
    return m;
}

// Conway's block method for n = 2u with u odd >= 3.
IntMatrix square_singly_even(int n) {
    const int u = n / 2;
    const int half = (u - 1) / 2;
    // 0 = L, 1 = U, 2 = X
    IntMatrix type(u, u, 0);
    for (int i = 0; i < u; ++i)
        for (int j = 0; j < u; ++j) type.at(i, j) = i <= half ? 0 : (i == half + 1 ? 1 : 2);
    type.at(half, half) = 1;
    type.at(half + 1, half) = 0;

    static const int pat[3][2][2] = {
        {{4, 1}, {2, 3}},  // L
        {{1, 4}, {2, 3}},  // U
        {{1, 4}, {3, 2}},  // X
    };
    IntMatrix grid = square_odd(u);
    IntMatrix m(n, n);
    for (int i = 0; i < u; ++i)
        for (int j = 0; j < u; ++j) {
            std::int64_t base = (grid.at(i, j) - 1) * 4;
            int t = static_cast<int>(type.at(i, j));
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) m.at(2 * i + a, 2 * j + b) = base + pat[t][a][b];
        }
    return m;
}

IntMatrix build_square(int n) {
    if (n == 1) return IntMatrix{{1}};
    if (n % 2 == 1) return square_odd(n);
    if (n % 4 == 0) return square_doubly_even(n);
    return square_singly_even(n);
}

// ------------------------------------------------------------- 2xw strips

// 2 x w over [1, 2w], w even >= 4. Column j holds the pair (v, 2w+1-v).
std::optional<IntMatrix> two_row_base(int w) {
    const std::int64_t n1 = 2 * static_cast<std::int64_t>(w) + 1;
    std::vector<std::int64_t> incs(w);
    for (int v = 1; v <= w; ++v) incs[v - 1] = n1 - 2 * v;
    const std::int64_t want = static_cast<std::int64_t>(w) * w / 2;
    auto flips = subset_with_sum(incs, want);
    if (!flips) return std::nullopt;
    IntMatrix m(2, w);
    for (int v = 1; v <= w; ++v) m.at(0, v - 1) = v;
    for (int idx : *flips) m.at(0, idx) = n1 - (idx + 1);
    for (int j = 0; j < w; ++j) m.at(1, j) = n1 - m.at(0, j);
    return m;
}

// ------------------------------------------------------------- 3xw strips

// Three permutations of [1,w] with constant pointwise sums 3(w+1)/2, w odd.
void pointwise_triple(int w, std::vector<int>& a, std::vector<int>& b, std::vector<int>& c) {
    a.resize(w);
    b.resize(w);
    c.resize(w);
    const int s = 3 * (w + 1) / 2;
    for (int j = 1; j <= w; ++j) {
        a[j - 1] = j;
        b[j - 1] = (j - 1 + (w - 1) / 2) % w + 1;
        c[j - 1] = s - a[j - 1] - b[j - 1];
    }
}

// Transversal of `options` (one choice per column) hitting `target`; choices
// marked unavailable are skipped. Returns per-column choice index.
std::optional<std::vector<int>> pick_transversal(const std::vector<std::array<std::int64_t, 3>>& options,
                                                 const std::vector<std::array<bool, 3>>& usable,
                                                 std::int64_t target) {
    const int w = static_cast<int>(options.size());
    if (target < 0) return std::nullopt;
    std::vector<std::vector<char>> reach(w + 1);
    reach[0] = {1};
    std::vector<std::int64_t> maxpfx(w + 1, 0);
    for (int j = 0; j < w; ++j) {
        std::int64_t mx = 0;
        bool any = false;
        for (int t = 0; t < 3; ++t)
            if (usable[j][t]) {
                mx = std::max(mx, options[j][t]);
                any = true;
            }
        if (!any) return std::nullopt;
        maxpfx[j + 1] = maxpfx[j] + mx;
        reach[j + 1].assign(static_cast<std::size_t>(std::min<std::int64_t>(target, maxpfx[j + 1])) + 1, 0);
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(reach[j].size()); ++s) {
            if (!reach[j][static_cast<std::size_t>(s)]) continue;
            for (int t = 0; t < 3; ++t) {
                if (!usable[j][t]) continue;
                std::int64_t ns = s + options[j][t];
                if (ns < static_cast<std::int64_t>(reach[j + 1].size()))
                    reach[j + 1][static_cast<std::size_t>(ns)] = 1;
            }
        }
    }
    if (target >= static_cast<std::int64_t>(reach[w].size()) || !reach[w][static_cast<std::size_t>(target)])
        return std::nullopt;
    std::vector<int> choice(w, -1);
    std::int64_t s = target;
    for (int j = w; j-- > 0;) {
        for (int t = 0; t < 3; ++t) {
            if (!usable[j][t]) continue;
            std::int64_t ps = s - options[j][t];
            if (ps >= 0 && ps < static_cast<std::int64_t>(reach[j].size()) &&
                reach[j][static_cast<std::size_t>(ps)]) {
                choice[j] = t;
                s = ps;
                break;
            }
        }
        if (choice[j] < 0) return std::nullopt;
    }
    return choice;
}

// 3 x w over [1, 3w], w odd >= 5. Columns are built from a constant-sum
// permutation triple, rows from two sequential transversal fills.
std::optional<IntMatrix> three_row_base(int w) {
    std::vector<int> a, b, c;
    pointwise_triple(w, a, b, c);
    std::vector<std::array<std::int64_t, 3>> col(w);
    for (int j = 0; j < w; ++j)
        col[j] = {static_cast<std::int64_t>(a[j]), static_cast<std::int64_t>(w + b[j]),
                  static_cast<std::int64_t>(2 * w + c[j])};
    const std::int64_t row_target = static_cast<std::int64_t>(w) * (3 * w + 1) / 2;

    std::vector<std::array<bool, 3>> usable(w, {true, true, true});
    auto top = pick_transversal(col, usable, row_target);
    if (!top) return std::nullopt;
    for (int j = 0; j < w; ++j) usable[j][(*top)[j]] = false;
    auto mid = pick_transversal(col, usable, row_target);
    if (!mid) return std::nullopt;

    IntMatrix m(3, w);
    for (int j = 0; j < w; ++j) {
        m.at(0, j) = col[j][(*top)[j]];
        m.at(1, j) = col[j][(*mid)[j]];
        int rest = 3 - (*top)[j] - (*mid)[j];
        m.at(2, j) = col[j][rest];
    }
    return m;
}

// ----------------------------------------------------------------- border

// All subset sums of `items` as a bitset.
std::vector<std::uint64_t> reachable_sums(const std::vector<std::int64_t>& items,
                                          std::int64_t& total_out) {
    std::int64_t total = 0;
    for (auto v : items) total += v;
    total_out = total;
    const std::size_t words = (static_cast<std::size_t>(total) + 64) / 64;
    std::vector<std::uint64_t> bs(words, 0);
    bs[0] = 1;
    for (auto item : items) {
        const auto shift = static_cast<std::size_t>(item);
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = shift & 63;
        if (bit_shift == 0) {
            for (std::size_t w = words; w-- > word_shift;) bs[w] |= bs[w - word_shift];
        } else {
            for (std::size_t w = words; w-- > word_shift;) {
                std::uint64_t v = bs[w - word_shift] << bit_shift;
                if (w > word_shift) v |= bs[w - word_shift - 1] >> (64 - bit_shift);
                bs[w] |= v;
            }
        }
    }
    return bs;
}

bool test_bit(const std::vector<std::uint64_t>& bs, std::int64_t s, std::int64_t total) {
    if (s < 0 || s > total) return false;
    return (bs[static_cast<std::size_t>(s) >> 6] >> (s & 63)) & 1u;
}

// One oriented side of a border: which pairs it uses and which are flipped
// to their large value.
struct SideFill {
    std::vector<int> pairs;
    std::vector<bool> flip;
};

// Candidate fills of a border side of `m` pairs from `rem` summing to `req`.
// Bases are m-1 pairs drawn from the ends of `rem`; the last slot is a free
// pair solved by value against the base's reachable flip sums.
std::vector<SideFill> side_candidates(const std::vector<int>& rem, int m, std::int64_t req,
                                      std::int64_t n1, const std::vector<char>& available,
                                      std::size_t cap) {
    std::vector<SideFill> out;
    const int n = static_cast<int>(rem.size());
    if (m < 1 || m > n) return out;

    std::vector<std::vector<int>> bases;
    auto push_base = [&](std::vector<int> b) {
        if (static_cast<int>(b.size()) != m - 1) return;
        std::sort(b.begin(), b.end());
        if (std::unique(b.begin(), b.end()) == b.end()) bases.push_back(std::move(b));
    };
    // Interleaved picks from both ends leave both sides of the split with a
    // spread of small and large pairs, which keeps their flip sums dense.
    for (int phase = 0; phase < 2; ++phase) {
        std::vector<int> b;
        for (int off = 0; static_cast<int>(b.size()) < m - 1; ++off) {
            int lo = 2 * off + phase;
            int hi = n - 1 - 2 * off - phase;
            if (lo >= n || hi < 0 || lo > hi) break;
            b.push_back(rem[lo]);
            if (static_cast<int>(b.size()) < m - 1 && hi != lo) b.push_back(rem[hi]);
        }
        push_base(std::move(b));
    }
    {
        std::vector<int> b;
        for (int i = 0; i < n && static_cast<int>(b.size()) < m - 1; i += 2) b.push_back(rem[i]);
        push_base(std::move(b));
        b.clear();
        for (int i = 1; i < n && static_cast<int>(b.size()) < m - 1; i += 2) b.push_back(rem[i]);
        push_base(std::move(b));
    }
    for (int a = 0; a <= m - 1; ++a) {
        // first a pairs and last m-1-a pairs
        std::vector<int> b(rem.begin(), rem.begin() + a);
        b.insert(b.end(), rem.end() - (m - 1 - a), rem.end());
        push_base(std::move(b));
    }

    for (const auto& base : bases) {
        if (out.size() >= cap) break;
        const std::size_t base_cap = std::min(cap, out.size() + 8);
        std::vector<char> in_base(available.size(), 0);
        std::int64_t base_vals = 0;
        std::vector<std::int64_t> incs(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            base_vals += base[i];
            incs[i] = n1 - 2 * base[i];
            in_base[static_cast<std::size_t>(base[i])] = 1;
        }
        std::int64_t total = 0;
        auto reach = reachable_sums(incs, total);
        const std::int64_t r = req - base_vals;
        // unflipped free pair x contributes x; flipped contributes n1 - x
        for (int pass = 0; pass < 2 && out.size() < base_cap; ++pass) {
            for (std::size_t x = 1; x < available.size() && out.size() < base_cap; ++x) {
                if (!available[x] || in_base[x]) continue;
                std::int64_t s = pass == 0 ? r - static_cast<std::int64_t>(x)
                                           : r - (n1 - static_cast<std::int64_t>(x));
                if (!test_bit(reach, s, total)) continue;
                auto chosen = subset_with_sum(incs, s);
                if (!chosen) continue;
                SideFill fill;
                fill.pairs = base;
                fill.pairs.push_back(static_cast<int>(x));
                fill.flip.assign(base.size() + 1, false);
                for (int idx : *chosen) fill.flip[static_cast<std::size_t>(idx)] = true;
                fill.flip.back() = pass == 1;
                out.push_back(std::move(fill));
            }
        }
    }
    return out;
}

// Wraps a border around `interior` ((h-2)x(k-2) over [E+1, hk-E]) using the
// 2E extreme labels. Vertical border pairs sit pointwise-complementary in
// rows 0/h-1, horizontal ones in columns 0/k-1, corner pairs diagonally.
std::optional<IntMatrix> try_border(int h, int k, const IntMatrix& interior) {
    const std::int64_t n1 = static_cast<std::int64_t>(h) * k + 1;
    const int e = h + k - 2;
    const int vcount = k - 2;
    const int hcount = h - 2;
    const std::int64_t row_target = static_cast<std::int64_t>(k) * n1 / 2;
    const std::int64_t col_target = static_cast<std::int64_t>(h) * n1 / 2;
    const bool odd_board = (h % 2 == 1);

    std::vector<int> pool;
    if (e <= 14) {
        pool.resize(e);
        std::iota(pool.begin(), pool.end(), 1);
    } else {
        pool = {e, e - 1, e - 2, e - 3, e - 4, e - 5, 1, 2, 3, 4};
    }
    // for odd boards pair-orientation moves are even, so corner values fix the
    // two target parities up front
    int need_parity = 0;
    if (odd_board) {
        std::int64_t lhs = static_cast<std::int64_t>(e) * (e + 1) / 2 - e * (n1 / 2);
        need_parity = static_cast<int>(((lhs % 2) + 2) % 2);
    }

    std::vector<std::pair<int, int>> corner_pairs;
    for (int p1 : pool)
        for (int p2 : pool) {
            if (p1 == p2) continue;
            if (odd_board && ((p1 + p2) & 1) != need_parity) continue;
            corner_pairs.emplace_back(p1, p2);
        }
    std::stable_sort(corner_pairs.begin(), corner_pairs.end(),
                     [](auto& a, auto& b) { return a.first + a.second > b.first + b.second; });

    // mid-top fill from the pairs V keeps once H is settled
    auto solve_top = [&](const std::vector<int>& rem, const SideFill& hside,
                         std::int64_t top_req) -> std::optional<SideFill> {
        std::vector<char> in_h(static_cast<std::size_t>(e) + 1, 0);
        for (int v : hside.pairs) in_h[static_cast<std::size_t>(v)] = 1;
        SideFill top;
        std::int64_t vbase = 0;
        std::vector<std::int64_t> vincs;
        for (int v : rem) {
            if (in_h[static_cast<std::size_t>(v)]) continue;
            top.pairs.push_back(v);
            vbase += v;
            vincs.push_back(n1 - 2 * v);
        }
        const std::int64_t ttarget = top_req - vbase;
        if (ttarget < 0) return std::nullopt;
        if (odd_board && (ttarget & 1)) return std::nullopt;
        auto vflip = subset_with_sum(vincs, ttarget);
        if (!vflip) return std::nullopt;
        top.flip.assign(top.pairs.size(), false);
        for (int idx : *vflip) top.flip[static_cast<std::size_t>(idx)] = true;
        return top;
    };

    auto assemble = [&](std::int64_t c_tl, std::int64_t c_tr, const SideFill& top,
                        const SideFill& left) {
        IntMatrix m(h, k);
        for (int i = 0; i < h - 2; ++i)
            for (int j = 0; j < k - 2; ++j) m.at(i + 1, j + 1) = interior.at(i, j);
        m.at(0, 0) = c_tl;
        m.at(0, k - 1) = c_tr;
        m.at(h - 1, 0) = n1 - c_tr;
        m.at(h - 1, k - 1) = n1 - c_tl;
        for (int j = 0; j < vcount; ++j) {
            std::int64_t v = top.flip[j] ? n1 - top.pairs[j] : top.pairs[j];
            m.at(0, j + 1) = v;
            m.at(h - 1, j + 1) = n1 - v;
        }
        for (int i = 0; i < hcount; ++i) {
            std::int64_t v = left.flip[i] ? n1 - left.pairs[i] : left.pairs[i];
            m.at(i + 1, 0) = v;
            m.at(i + 1, k - 1) = n1 - v;
        }
        return m;
    };

    const bool small_e = e <= 16;
    for (auto [p1, p2] : corner_pairs) {
        for (int orient = 0; orient < 4; ++orient) {
            const std::int64_t c_tl = (orient & 1) ? n1 - p1 : p1;
            const std::int64_t c_tr = (orient & 2) ? n1 - p2 : p2;
            const std::int64_t c_bl = n1 - c_tr;
            const std::int64_t top_req = row_target - c_tl - c_tr;
            const std::int64_t left_req = col_target - c_tl - c_bl;

            std::vector<int> rem;
            rem.reserve(e - 2);
            std::vector<char> available(static_cast<std::size_t>(e) + 1, 0);
            for (int v = 1; v <= e; ++v)
                if (v != p1 && v != p2) {
                    rem.push_back(v);
                    available[static_cast<std::size_t>(v)] = 1;
                }

            if (small_e) {
                // exhaustive choice of the left-side pairs for tiny borders
                const int n = static_cast<int>(rem.size());
                std::vector<int> idx(hcount);
                std::iota(idx.begin(), idx.end(), 0);
                while (true) {
                    SideFill left;
                    std::int64_t hbase = 0;
                    std::vector<std::int64_t> hincs;
                    for (int i : idx) {
                        left.pairs.push_back(rem[i]);
                        hbase += rem[i];
                        hincs.push_back(n1 - 2 * rem[i]);
                    }
                    std::int64_t ltarget = left_req - hbase;
                    if (ltarget >= 0) {
                        if (auto hflip = subset_with_sum(hincs, ltarget)) {
                            left.flip.assign(left.pairs.size(), false);
                            for (int t : *hflip) left.flip[static_cast<std::size_t>(t)] = true;
                            if (auto top = solve_top(rem, left, top_req))
                                return assemble(c_tl, c_tr, *top, left);
                        }
                    }
                    int i = hcount - 1;
                    while (i >= 0 && idx[i] == n - hcount + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < hcount; ++j) idx[j] = idx[j - 1] + 1;
                }
            } else {
                for (const auto& left : side_candidates(rem, hcount, left_req, n1, available, 64)) {
                    if (auto top = solve_top(rem, left, top_req))
                        return assemble(c_tl, c_tr, *top, left);
                }
            }
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------ canonical builder

const IntMatrix& cached_canonical(int h, int k);

// h <= k, admissible, entries over [1, hk].
IntMatrix build_canonical(int h, int k) {
    if (h == k) return build_square(h);
    std::optional<IntMatrix> m;
    if (h == 2) {
        m = two_row_base(k);
    } else if (h == 3) {
        m = three_row_base(k);
    } else {
        IntMatrix inner = cached_canonical(h - 2, k - 2);
        inner.add_scalar(h + k - 2);
        m = try_border(h, k, inner);
    }
    if (!m) {
        std::ostringstream os;
        os << "internal error: " << h << "x" << k << " magic rectangle construction failed";
        throw std::logic_error(os.str());
    }
    return *m;
}

const IntMatrix& cached_canonical(int h, int k) {
    static std::map<std::pair<int, int>, IntMatrix> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find({h, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(h, k), build_canonical(h, k)).first;
    return it->second;
}

}  // namespace

std::vector<std::string> verify_rectangle(const MagicRectangle& m) {
    std::vector<std::string> issues;
    if (m.h < 1 || m.k < 1 || m.entries.rows() != m.h || m.entries.cols() != m.k) {
        issues.push_back("dimension mismatch");
        return issues;
    }
    const std::int64_t n = static_cast<std::int64_t>(m.h) * m.k;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < m.h; ++i)
        for (int j = 0; j < m.k; ++j) {
            std::int64_t v = m.entries.at(i, j) - m.offset;
            if (v < 1 || v > n) {
                std::ostringstream os;
                os << "entry " << m.entries.at(i, j) << " outside [" << m.offset + 1 << ", "
                   << m.offset + n << "]";
                issues.push_back(os.str());
            } else if (seen[static_cast<std::size_t>(v - 1)]) {
                std::ostringstream os;
                os << "entry " << m.entries.at(i, j) << " repeated";
                issues.push_back(os.str());
            } else {
                seen[static_cast<std::size_t>(v - 1)] = true;
            }
        }
    for (int i = 0; i < m.h; ++i)
        if (m.entries.row_sum(i) != m.row_constant()) {
            std::ostringstream os;
            os << "row " << i << " sums to " << m.entries.row_sum(i) << ", expected "
               << m.row_constant();
            issues.push_back(os.str());
        }
    for (int j = 0; j < m.k; ++j)
        if (m.entries.col_sum(j) != m.col_constant()) {
            std::ostringstream os;
            os << "column " << j << " sums to " << m.entries.col_sum(j) << ", expected "
               << m.col_constant();
            issues.push_back(os.str());
        }
    return issues;
}

MagicRectangle magic_square(int n, std::int64_t offset) {
    if (n < 1) throw BlockError(BlockError::Kind::bad_dimensions, "order must be positive");
    if (n == 2)
        throw BlockError(BlockError::Kind::no_such_square, "no magic square of order 2");
    return magic_rectangle(n, n, offset);
}

MagicRectangle magic_rectangle(int h, int k, std::int64_t offset) {
    if (h < 1 || k < 1)
        throw BlockError(BlockError::Kind::bad_dimensions, "dimensions must be positive");
    if ((h == 1) != (k == 1))
        throw BlockError(BlockError::Kind::bad_dimensions,
                         "a single row or column cannot have constant sums in both directions");
    if (h == 2 && k == 2)
        throw BlockError(BlockError::Kind::no_such_rectangle, "no 2x2 magic rectangle");
    if (h == k && h == 2)
        throw BlockError(BlockError::Kind::no_such_square, "no magic square of order 2");
    if (h % 2 != k % 2)
        throw BlockError(BlockError::Kind::parity_mismatch,
                         "magic rectangles require h and k of equal parity");

    MagicRectangle out;
    out.h = h;
    out.k = k;
    out.offset = offset;
    if (h == 1 && k == 1) {
        out.entries = IntMatrix(1, 1, offset + 1);
        return out;
    }
    IntMatrix m = h <= k ? cached_canonical(h, k) : cached_canonical(k, h).transposed();
    if (offset != 0) m.add_scalar(offset);
    out.entries = std::move(m);
    auto issues = verify_rectangle(out);
    if (!issues.empty())
        throw std::logic_error("internal error: constructed rectangle failed verification: " +
                               issues.front());
    return out;
}

MagicRectangle pin_corner_max(const MagicRectangle& m) {
    MagicRectangle out = m;
    int bi = 0, bj = 0;
    for (int i = 0; i < m.h; ++i)
        for (int j = 0; j < m.k; ++j)
            if (out.entries.at(i, j) > out.entries.at(bi, bj)) {
                bi = i;
                bj = j;
            }
    if (bi != 0) out.entries.swap_rows(0, bi);
    if (bj != 0) out.entries.swap_cols(0, bj);
    return out;
}

MagicRectangle pin_corner_zero(const MagicRectangle& m) {
    if (m.k != 2 || m.offset != -1)
        throw BlockError(BlockError::Kind::bad_dimensions,
                         "zero pinning expects an h x 2 rectangle over [0, 2h-1]");
    MagicRectangle out = m;
    for (int i = 0; i < m.h; ++i)
        for (int j = 0; j < 2; ++j)
            if (out.entries.at(i, j) == 0) {
                if (i != 0) out.entries.swap_rows(0, i);
                if (j != 0) out.entries.swap_cols(0, 1);
                return out;
            }
    throw BlockError(BlockError::Kind::pattern_unreachable, "entry 0 not present");
}

}  // namespace boardmagic
