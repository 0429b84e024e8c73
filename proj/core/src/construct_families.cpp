#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "boardmagic/construct.hpp"

namespace boardmagic {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Locates a label in a matrix; (-1,-1) when absent.
std::pair<int, int> find_value(const IntMatrix& m, std::int64_t v) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) == v) return {i, j};
    return {-1, -1};
}

}  // namespace

// ---------------------------------------------------------------- (1,1,r)

Design ladder_design(int r) {
    require(r >= 1, "ladder layout needs r >= 1");
    Design d;
    d.board = {1, 1, r};
    d.pq = IntMatrix(1, 1, 2 * static_cast<std::int64_t>(r) + 1);
    d.pr = IntMatrix(1, r);
    d.qr = IntMatrix(1, r);
    for (int j = 0; j < r; ++j) {
        d.pr.at(0, j) = j + 1;
        d.qr.at(0, j) = 2 * r - j;
    }
    return d;
}

Design ladder_split_design(int r) {
    require(r >= 2 && r % 4 != 1, "split layout needs r >= 2, r != 1 (mod 4)");
    Design d;
    d.board = {1, 1, r};
    d.pr = IntMatrix(1, r);
    d.qr = IntMatrix(1, r);
    // period-4 block over [lo, lo+4) columns using labels around 2r
    auto fill_block = [&](int pos, int t) {
        d.pr.at(0, pos) = 4 * t + 1;
        d.pr.at(0, pos + 1) = 2 * r - 1 - 4 * t;
        d.pr.at(0, pos + 2) = 2 * r - 2 - 4 * t;
        d.pr.at(0, pos + 3) = 4 * t + 4;
        d.qr.at(0, pos) = 2 * r - 4 * t;
        d.qr.at(0, pos + 1) = 4 * t + 2;
        d.qr.at(0, pos + 2) = 4 * t + 3;
        d.qr.at(0, pos + 3) = 2 * r - 3 - 4 * t;
    };
    if (r % 4 == 0) {
        d.pq = IntMatrix(1, 1, 2 * static_cast<std::int64_t>(r) + 1);
        for (int t = 0; t < r / 4; ++t) fill_block(4 * t, t);
    } else if (r == 2) {
        d.pq = IntMatrix(1, 1, 1);
        d.pr = IntMatrix{{2, 4}};
        d.qr = IntMatrix{{5, 3}};
    } else if (r % 4 == 2) {
        d.pq = IntMatrix(1, 1, 1);
        const std::int64_t rr = r;
        const std::int64_t top[6] = {rr - 4, rr + 6, rr - 2, rr + 4, rr + 3, rr + 2};
        const std::int64_t bot[6] = {rr + 7, rr - 3, rr + 5, rr - 1, rr, rr + 1};
        for (int j = 0; j < 6; ++j) {
            d.pr.at(0, j) = top[j];
            d.qr.at(0, j) = bot[j];
        }
        for (int t = 0; t < (r - 6) / 4; ++t) {
            int pos = 6 + 4 * t;
            d.pr.at(0, pos) = 4 * t + 2;
            d.pr.at(0, pos + 1) = 2 * r - 4 * t;
            d.pr.at(0, pos + 2) = 2 * r - 1 - 4 * t;
            d.pr.at(0, pos + 3) = 4 * t + 5;
            d.qr.at(0, pos) = 2 * r + 1 - 4 * t;
            d.qr.at(0, pos + 1) = 4 * t + 3;
            d.qr.at(0, pos + 2) = 4 * t + 4;
            d.qr.at(0, pos + 3) = 2 * r - 2 - 4 * t;
        }
    } else {  // r = 3 (mod 4)
        d.pq = IntMatrix(1, 1, static_cast<std::int64_t>(r) + 1);
        const std::int64_t rr = r;
        const std::int64_t top[3] = {rr - 2, rr + 3, rr + 2};
        const std::int64_t bot[3] = {rr + 4, rr - 1, rr};
        for (int j = 0; j < 3; ++j) {
            d.pr.at(0, j) = top[j];
            d.qr.at(0, j) = bot[j];
        }
        for (int t = 0; t < (r - 3) / 4; ++t) {
            int pos = 3 + 4 * t;
            d.pr.at(0, pos) = 4 * t + 1;
            d.pr.at(0, pos + 1) = 2 * r - 4 * t;
            d.pr.at(0, pos + 2) = 2 * r - 1 - 4 * t;
            d.pr.at(0, pos + 3) = 4 * t + 4;
            d.qr.at(0, pos) = 2 * r + 1 - 4 * t;
            d.qr.at(0, pos + 1) = 4 * t + 2;
            d.qr.at(0, pos + 2) = 4 * t + 3;
            d.qr.at(0, pos + 3) = 2 * r - 2 - 4 * t;
        }
    }
    return d;
}

// ------------------------------------------------------------ corner trim

Design corner_trim_design(int q, int r) {
    require(q >= 2 && r >= q && q % 2 == r % 2, "corner trim needs 2 <= q <= r, q = r (mod 2)");
    MagicRectangle a = pin_corner_max(magic_rectangle(q + 1, r + 1, 0));
    Design d;
    d.board = {1, q, r};
    d.pq = IntMatrix(1, q);
    d.pr = IntMatrix(1, r);
    d.qr = IntMatrix(q, r);
    for (int i = 0; i < q; ++i) d.pq.at(0, i) = a.entries.at(i + 1, 0);
    for (int j = 0; j < r; ++j) d.pr.at(0, j) = a.entries.at(0, j + 1);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < r; ++j) d.qr.at(i, j) = a.entries.at(i + 1, j + 1);
    return d;
}

// ------------------------------------------------- stacked strips (1,q,r)

Design stacked_design(int s, int k, bool translated) {
    require(s >= 1 && k > s, "stacked strips need k > s >= 1");
    const int q = 2 * s + 1;
    const int r = 2 * k;
    const std::int64_t base = 2 * s + 1;

    // strip matrix: header plus q strip rows, each row two half-strips
    IntMatrix c(q + 1, r);
    auto fill_half = [&](int row, bool descending, std::int64_t mult, int col0) {
        for (int j = 0; j < k; ++j) {
            std::int64_t v = descending ? k - j : j + 1;
            c.at(row, col0 + j) = v + base + mult * k;
        }
    };
    fill_half(0, true, 4 * s + 3, 0);
    fill_half(0, true, 4 * s + 2, k);
    for (int t = 1; t <= q; ++t) {
        bool beta = (t % 2 == 0);
        std::int64_t left = beta ? 2 * t - 1 : 2 * (t - 1);
        std::int64_t right = beta ? 4 * s + 2 - 2 * t : 4 * s + 3 - 2 * t;
        fill_half(t, beta, left, 0);
        fill_half(t, beta, right, k);
    }

    std::vector<std::int64_t> short_col(q);
    short_col[0] = s + 1;
    for (int i = 1; i <= s; ++i) {
        short_col[2 * i - 1] = s + 1 + i;
        short_col[2 * i] = s + 1 - i;
    }

    if (translated) {
        c.add_scalar(-(2 * s + 1));
        for (auto& v : short_col) v += static_cast<std::int64_t>(4) * s * k + 4 * k;
    }

    Design d;
    d.board = {1, q, r};
    d.pq = IntMatrix(1, q);
    for (int i = 0; i < q; ++i) d.pq.at(0, i) = short_col[i];
    d.pr = IntMatrix(1, r);
    for (int j = 0; j < r; ++j) d.pr.at(0, j) = c.at(0, j);
    d.qr = IntMatrix(q, r);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < r; ++j) d.qr.at(i, j) = c.at(i + 1, j);

    // Strip rows come in pairs whose sums differ by 2i once the short column
    // is attached; swap entries whose differences total exactly i.
    for (int i = 1; i <= s; ++i) {
        const int top = 2 * i - 1;
        const int bot = 2 * i;
        const std::int64_t before_top = short_col[top] + d.qr.row_sum(top);
        const std::int64_t before_bot = short_col[bot] + d.qr.row_sum(bot);
        if (before_top - before_bot != 2 * i) throw std::logic_error("strip imbalance unexpected");
        auto swap_at = [&](int col, std::int64_t want_diff) {
            std::int64_t diff = d.qr.at(top, col) - d.qr.at(bot, col);
            if (diff != want_diff) throw std::logic_error("strip swap column mismatch");
            std::swap(d.qr.at(top, col), d.qr.at(bot, col));
        };
        if (i % 2 == 1) {
            swap_at(2 * k - (i + 1) / 2, i);
        } else {
            swap_at(2 * k - 1 - i / 2, i + 1);
            swap_at(0, -1);
        }
        if (short_col[top] + d.qr.row_sum(top) != short_col[bot] + d.qr.row_sum(bot))
            throw std::logic_error("strip swap failed to balance the pair");
    }
    return d;
}

// --------------------------------------------- block product (1, 2s, 2k-1)

Design block_product_design(int s, int k) {
    require(s >= 2 && k > s, "block product needs k > s >= 2");
    const int q = 2 * s;
    const int r = 2 * k - 1;

    MagicRectangle a = pin_corner_zero(magic_rectangle(q, 2, -1));
    IntMatrix n(q, 2 * k);
    for (int i = 0; i < q; ++i)
        for (int half = 0; half < 2; ++half) {
            std::int64_t block = k * a.entries.at(i, half);
            for (int j = 0; j < k; ++j) {
                std::int64_t v = (i % 2 == 0) ? j + 1 : k - j;
                n.at(i, half * k + j) = block + v;
            }
        }
    // reverse segments [1, k-1] and [k, 2k-1] of the first row
    std::reverse(&n.at(0, 1), &n.at(0, 1) + (k - 1));
    std::reverse(&n.at(0, k), &n.at(0, k) + k);

    const std::int64_t big = static_cast<std::int64_t>(4) * s * k;
    Design d;
    d.board = {1, q, r};
    d.pr = IntMatrix(1, r);
    for (int j = 1; j < k; ++j) d.pr.at(0, j - 1) = big + 2 * j;            // evens
    for (int j = 0; j < k; ++j) d.pr.at(0, k - 1 + j) = big + 2 * j + 1;    // odds
    d.pq = IntMatrix(1, q);
    for (int i = 0; i < q; ++i) d.pq.at(0, i) = n.at(i, 0);
    d.qr = IntMatrix(q, r);
    for (int i = 0; i < q; ++i)
        for (int j = 1; j < 2 * k; ++j) d.qr.at(i, j - 1) = n.at(i, j);
    return d;
}

// ------------------------------------------------------- (1,2,r) families

Design two_row_family_design(int r) {
    require(r >= 3 && r % 2 == 1, "two-row family needs odd r >= 3");
    Design d;
    d.board = {1, 2, r};
    if (r == 3) {
        d.pq = IntMatrix{{8, 10}};
        d.pr = IntMatrix{{2, 4, 6}};
        d.qr = IntMatrix{{5, 11, 3}, {9, 1, 7}};
        return d;
    }
    d.pq = IntMatrix(1, 2);
    d.pr = IntMatrix(1, r);
    d.qr = IntMatrix(2, r);
    if (r % 4 == 1) {
        const std::int64_t g = (r - 1) / 4;
        d.pq.at(0, 0) = 12 * g + 5;
        d.pq.at(0, 1) = 12 * g + 4;
        for (std::int64_t t = 1; t <= r; ++t) {
            std::int64_t pr_v, top, bot;
            if (t <= 2 * g) {
                pr_v = 2 * t - 1;
                bool odd = (t % 2 == 1);
                top = odd ? 12 * g + 4 - t : 6 * g + 3 - t;
                bot = odd ? 6 * g + 3 - t : 12 * g + 4 - t;
            } else if (t == 2 * g + 1) {
                pr_v = 10 * g + 3;
                top = 4 * g + 1;
                bot = 4 * g + 2;
            } else {
                std::int64_t u = t - 2 * g - 1;
                pr_v = 2 * u;
                bool odd = (u % 2 == 1);
                top = odd ? 10 * g + 3 - u : 8 * g + 3 - u;
                bot = odd ? 8 * g + 3 - u : 10 * g + 3 - u;
            }
            d.pr.at(0, static_cast<int>(t) - 1) = pr_v;
            d.qr.at(0, static_cast<int>(t) - 1) = top;
            d.qr.at(1, static_cast<int>(t) - 1) = bot;
        }
    } else {  // r = 3 (mod 4), r >= 7
        const std::int64_t g = (r - 3) / 4;
        d.pq.at(0, 0) = 12 * g + 10;
        d.pq.at(0, 1) = 12 * g + 11;
        for (std::int64_t t = 1; t <= r; ++t) {
            std::int64_t pr_v, top, bot;
            if (t <= 2 * g + 2) {
                pr_v = 2 * t - 1;
                bool odd = (t % 2 == 1);
                top = odd ? 6 * g + 6 - t : 12 * g + 10 - t;
                bot = odd ? 12 * g + 10 - t : 6 * g + 6 - t;
            } else {
                std::int64_t u = t - 2 * g - 2;
                pr_v = 2 * u;
                bool odd = (u % 2 == 1);
                top = odd ? 8 * g + 7 - u : 10 * g + 8 - u;
                bot = odd ? 10 * g + 8 - u : 8 * g + 7 - u;
            }
            d.pr.at(0, static_cast<int>(t) - 1) = pr_v;
            d.qr.at(0, static_cast<int>(t) - 1) = top;
            d.qr.at(1, static_cast<int>(t) - 1) = bot;
        }
        // rebalance the two long rows by trading labels with the short row,
        // column by column so the r-group sums stay put
        auto exchange = [&](std::int64_t pr_val, std::int64_t qr_val) {
            auto [pi, pj] = find_value(d.pr, pr_val);
            auto [qi, qj] = find_value(d.qr, qr_val);
            if (pi < 0 || qi < 0 || pj != qj) throw std::logic_error("exchange misaligned");
            std::swap(d.pr.at(pi, pj), d.qr.at(qi, qj));
        };
        exchange(4 * g - 2, 6 * g + 8);
        exchange(4 * g - 1, 4 * g + 6);
        exchange(4 * g + 2, 8 * g + 7);
    }
    return d;
}

// ------------------------------------------------------- (2,2,r) families

namespace {

// period-4 strip used by the (2,2,r) layouts; fills columns [pos, pos+4)
void fill_22_block(IntMatrix& m, int row0, int row1, int pos, std::int64_t t, std::int64_t r) {
    m.at(row0, pos) = 4 * t + 1;
    m.at(row0, pos + 1) = 2 * r - 1 - 4 * t;
    m.at(row0, pos + 2) = 2 * r - 2 - 4 * t;
    m.at(row0, pos + 3) = 4 * t + 4;
    m.at(row1, pos) = 2 * r - 4 * t;
    m.at(row1, pos + 1) = 4 * t + 2;
    m.at(row1, pos + 2) = 4 * t + 3;
    m.at(row1, pos + 3) = 2 * r - 3 - 4 * t;
}

}  // namespace

Design two_two_design(int r) {
    require(r >= 2, "two-two layout needs r >= 2");
    Design d;
    d.board = {2, 2, r};
    if (r == 2) {
        d.pq = IntMatrix{{2, 4}, {1, 3}};
        d.pr = IntMatrix{{7, 5}, {6, 8}};
        d.qr = IntMatrix{{11, 12}, {10, 9}};
        return d;
    }
    const std::int64_t rr = r;
    d.pr = IntMatrix(2, r);
    d.qr = IntMatrix(2, r);
    auto add_qr_from_pr = [&]() {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < r; ++j) d.qr.at(i, j) = d.pr.at(i, j) + 2 * rr;
    };
    switch (r % 4) {
        case 0: {
            d.pq = IntMatrix{{4 * rr + 1, 4 * rr + 4}, {4 * rr + 3, 4 * rr + 2}};
            for (int t = 0; t < r / 4; ++t) fill_22_block(d.pr, 0, 1, 4 * t, t, rr);
            add_qr_from_pr();
            std::swap(d.qr.at(0, r - 1), d.qr.at(1, r - 1));  // 3r <-> 3r+1
            break;
        }
        case 2: {
            d.pq = IntMatrix{{4 * rr + 2, 4 * rr + 4}, {4 * rr + 1, 4 * rr + 3}};
            for (int t = 0; t < (r - 2) / 4; ++t) fill_22_block(d.pr, 0, 1, 4 * t, t, rr);
            d.pr.at(0, r - 2) = rr - 1;
            d.pr.at(0, r - 1) = rr + 1;
            d.pr.at(1, r - 2) = rr + 2;
            d.pr.at(1, r - 1) = rr;
            add_qr_from_pr();
            std::swap(d.qr.at(0, r - 2), d.qr.at(1, r - 2));  // 3r-1 <-> 3r+2
            break;
        }
        case 1: {
            require(r >= 5, "two-two layout: r = 1 handled as a fixture");
            d.pq = IntMatrix{{4 * rr + 3, 4 * rr + 2}, {4 * rr + 1, 4 * rr + 4}};
            for (int t = 0; t < (r - 5) / 4; ++t) fill_22_block(d.pr, 0, 1, 4 * t, t, rr);
            const int pos = r - 5;
            const std::int64_t pr_top[5] = {rr - 4, rr + 4, rr - 2, rr + 2, 3 * rr};
            const std::int64_t pr_bot[5] = {rr + 5, rr - 3, 3 * rr - 2, rr - 1, rr + 1};
            const std::int64_t qr_top[5] = {3 * rr - 4, 3 * rr + 4, rr + 3, 3 * rr + 2,
                                            3 * rr + 1};
            const std::int64_t qr_bot[5] = {3 * rr + 5, 3 * rr - 3, 3 * rr + 3, 3 * rr - 1, rr};
            for (int t = 0; t < (r - 5) / 4; ++t) fill_22_block(d.qr, 0, 1, 4 * t, t, rr);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < pos; ++j) d.qr.at(i, j) += 2 * rr;
            for (int j = 0; j < 5; ++j) {
                d.pr.at(0, pos + j) = pr_top[j];
                d.pr.at(1, pos + j) = pr_bot[j];
                d.qr.at(0, pos + j) = qr_top[j];
                d.qr.at(1, pos + j) = qr_bot[j];
            }
            break;
        }
        default: {  // r = 3 (mod 4)
            d.pq = IntMatrix{{4 * rr + 1, 4 * rr + 3}, {4 * rr + 2, 4 * rr + 4}};
            for (int t = 0; t < (r - 3) / 4; ++t) fill_22_block(d.pr, 0, 1, 4 * t, t, rr);
            const int pos = r - 3;
            const std::int64_t pr_top[3] = {rr - 2, rr + 2, 3 * rr};
            const std::int64_t pr_bot[3] = {3 * rr - 2, rr - 1, rr + 1};
            const std::int64_t qr_top[3] = {rr + 3, 3 * rr + 2, 3 * rr + 1};
            const std::int64_t qr_bot[3] = {3 * rr + 3, 3 * rr - 1, rr};
            for (int t = 0; t < (r - 3) / 4; ++t) fill_22_block(d.qr, 0, 1, 4 * t, t, rr);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < pos; ++j) d.qr.at(i, j) += 2 * rr;
            for (int j = 0; j < 3; ++j) {
                d.pr.at(0, pos + j) = pr_top[j];
                d.pr.at(1, pos + j) = pr_bot[j];
                d.qr.at(0, pos + j) = qr_top[j];
                d.qr.at(1, pos + j) = qr_bot[j];
            }
            break;
        }
    }
    return d;
}

Design two_two_even_bi_design(int r) {
    require(r >= 2 && r % 2 == 0, "bi layout needs even r >= 2");
    Design d;
    d.board = {2, 2, r};
    if (r == 2) {
        d.pq = IntMatrix{{4, 10}, {5, 11}};
        d.pr = IntMatrix{{8, 2}, {1, 7}};
        d.qr = IntMatrix{{12, 9}, {3, 6}};
        return d;
    }
    const std::int64_t rr = r;
    d.pq = IntMatrix{{4 * rr + 1, 4 * rr + 2}, {4 * rr + 4, 4 * rr + 3}};
    // the four long rows are the mod-8 residue classes of [1, 4r]
    auto class_row = [&](int a, int b, bool ascending) {
        std::vector<std::int64_t> vals;
        for (std::int64_t v = 1; v <= 4 * rr; ++v) {
            int m = static_cast<int>(v % 8);
            if (m == a || m == b) vals.push_back(v);
        }
        if (!ascending) std::reverse(vals.begin(), vals.end());
        IntMatrix row(1, r);
        for (int j = 0; j < r; ++j) row.at(0, j) = vals[static_cast<std::size_t>(j)];
        return row;
    };
    auto stack2 = [&](IntMatrix top, IntMatrix bot) {
        IntMatrix m(2, r);
        for (int j = 0; j < r; ++j) {
            m.at(0, j) = top.at(0, j);
            m.at(1, j) = bot.at(0, j);
        }
        return m;
    };
    if (r % 4 == 0) {
        d.pr = stack2(class_row(0, 1, true), class_row(2, 7, false));
        d.qr = stack2(class_row(3, 6, false), class_row(4, 5, true));
    } else {
        d.pr = stack2(class_row(4, 5, true), class_row(3, 6, false));
        d.qr = stack2(class_row(2, 7, false), class_row(0, 1, true));
    }
    auto [ai, aj] = find_value(d.pr, 2 * rr);
    auto [bi, bj] = find_value(d.pr, 2 * rr + 2);
    if (ai < 0 || bi < 0 || aj != bj) throw std::logic_error("rebalance pair misaligned");
    std::swap(d.pr.at(ai, aj), d.pr.at(bi, bj));
    return d;
}

// -------------------------------------------- merged-rectangle tri layouts

Design merge_pq_design(int p, int q, int r) {
    require(p % 2 == 1 && q % 2 == 1 && r % 2 == 0 && 3 <= p && p < q && q < r,
            "needs odd 3 <= p < q, even r > q");
    MagicRectangle tall = magic_rectangle(p + q, r, 0);
    MagicRectangle flat = magic_rectangle(p, q, static_cast<std::int64_t>(p + q) * r);
    Design d;
    d.board = {p, q, r};
    d.pq = flat.entries;
    d.pr = IntMatrix(p, r);
    d.qr = IntMatrix(q, r);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j) d.pr.at(i, j) = tall.entries.at(i, j);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < r; ++j) d.qr.at(i, j) = tall.entries.at(p + i, j);
    return d;
}

Design merge_pr_design(int p, int q, int r) {
    require(p % 2 == 1 && r % 2 == 1 && q % 2 == 0 && 3 <= p && p < q && q < r,
            "needs odd p, r and even q with 3 <= p < q < r");
    MagicRectangle flat = magic_rectangle(p, r, 0);
    MagicRectangle tall = magic_rectangle(p + r, q, static_cast<std::int64_t>(p) * r);
    Design d;
    d.board = {p, q, r};
    d.pr = flat.entries;
    d.pq = IntMatrix(p, q);
    d.qr = IntMatrix(q, r);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) d.pq.at(i, j) = tall.entries.at(i, j);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q; ++j) d.qr.at(j, i) = tall.entries.at(p + i, j);
    return d;
}

Design merge_qr_design(int p, int q, int r) {
    require(p % 2 == 0 && q % 2 == 1 && r % 2 == 1 && 2 <= p && p < q && q < r,
            "needs even p and odd q < r with 2 <= p < q");
    MagicRectangle flat = magic_rectangle(q, r, 0);
    MagicRectangle wide = magic_rectangle(p, q + r, static_cast<std::int64_t>(q) * r);
    Design d;
    d.board = {p, q, r};
    d.qr = flat.entries;
    d.pq = IntMatrix(p, q);
    d.pr = IntMatrix(p, r);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) d.pq.at(i, j) = wide.entries.at(i, j);
        for (int j = 0; j < r; ++j) d.pr.at(i, j) = wide.entries.at(i, q + j);
    }
    return d;
}

Design three_rect_design(int p, int q, int r, int variant) {
    require(p >= 2 && p <= q && q <= r && p % 2 == q % 2 && q % 2 == r % 2 &&
                !(p == 2 && q == 2),
            "needs same-parity 2 <= p <= q <= r with (p,q) != (2,2)");
    require(variant == 0 || variant == 1, "variant is 0 or 1");
    const std::int64_t npr = static_cast<std::int64_t>(p) * r;
    Design d;
    d.board = {p, q, r};
    d.pr = magic_rectangle(p, r, 0).entries;
    if (variant == 0) {
        d.pq = magic_rectangle(p, q, npr).entries;
        d.qr = magic_rectangle(q, r, npr + static_cast<std::int64_t>(p) * q).entries;
    } else {
        d.qr = magic_rectangle(q, r, npr).entries;
        d.pq = magic_rectangle(p, q, npr + static_cast<std::int64_t>(q) * r).entries;
    }
    return d;
}

// -------------------------------------------------------- (p,p,p) layouts

namespace {

// Substitutes each cell of a 2x2-block base design with an order-n magic
// square over the matching label interval.
Design substitute_blocks(const Design& base, int n) {
    auto expand = [&](const IntMatrix& m) {
        IntMatrix out(m.rows() * n, m.cols() * n);
        for (int bi = 0; bi < m.rows(); ++bi)
            for (int bj = 0; bj < m.cols(); ++bj) {
                MagicRectangle sq =
                    magic_square(n, (m.at(bi, bj) - 1) * static_cast<std::int64_t>(n) * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        out.at(bi * n + i, bj * n + j) = sq.entries.at(i, j);
            }
        return out;
    };
    Design d;
    d.board = {base.board.p * n, base.board.q * n, base.board.r * n};
    d.pq = expand(base.pq);
    d.pr = expand(base.pr);
    d.qr = expand(base.qr);
    return d;
}

}  // namespace

Design block_squares_bi_design(int p) {
    require(p >= 2 && p % 2 == 0, "needs even p >= 2");
    if (p == 2) return two_two_even_bi_design(2);
    if (p == 4) {
        Design d;
        d.board = {4, 4, 4};
        d.pq = IntMatrix{{41, 14, 15, 44}, {20, 39, 38, 17}, {40, 19, 18, 37}, {13, 42, 43, 16}};
        d.pr = IntMatrix{{29, 2, 3, 32}, {8, 27, 26, 5}, {28, 7, 6, 25}, {1, 30, 31, 4}};
        d.qr = IntMatrix{{45, 10, 11, 48}, {24, 35, 34, 21}, {36, 23, 22, 33}, {9, 46, 47, 12}};
        return d;
    }
    return substitute_blocks(two_two_even_bi_design(2), p / 2);
}

std::vector<std::string> verify_triple(const CirculantTriple& t) {
    std::vector<std::string> issues;
    const int p = t.p;
    for (const IntMatrix* m : {&t.a, &t.b, &t.c}) {
        if (m->rows() != p || m->cols() != p) {
            issues.push_back("matrix dimension mismatch");
            return issues;
        }
        for (int i = 0; i < p; ++i) {
            if (m->row_sum(i) != p) issues.push_back("row sum != p");
            if (m->col_sum(i) != p) issues.push_back("column sum != p");
        }
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            std::array<std::int64_t, 3> v = {t.a.at(i, j), t.b.at(i, j), t.c.at(i, j)};
            std::sort(v.begin(), v.end());
            if (v != std::array<std::int64_t, 3>{0, 1, 2}) {
                std::ostringstream os;
                os << "cell (" << i << "," << j << ") values are not {0,1,2}";
                issues.push_back(os.str());
            }
        }
    return issues;
}

CirculantTriple circulant_triple(int p) {
    require(p >= 3 && p % 2 == 1, "circulant triple needs odd p >= 3");
    const int n = (p - 1) / 2;
    auto circulant = [&](const std::vector<std::int64_t>& first) {
        IntMatrix m(p, p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) m.at(i, j) = first[((j - i) % p + p) % p];
        return m;
    };
    std::vector<std::int64_t> fa(p, 0), fc(p, 1);
    for (int j = 0; j < n; ++j) fa[j] = 2;
    fa[n] = 1;
    fc[n] = 0;
    fc[p - 1] = 2;
    CirculantTriple t;
    t.p = p;
    t.a = circulant(fa);
    t.c = circulant(fc);
    t.b = IntMatrix(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) t.b.at(i, j) = t.a.at(i, (j + n + 1) % p);
    t.square = magic_square(p, 0).entries;
    auto issues = verify_triple(t);
    if (!issues.empty()) throw std::logic_error("circulant triple invalid: " + issues.front());
    return t;
}

namespace {

Design circulant_design(int p, bool adjust_diagonal) {
    CirculantTriple t = circulant_triple(p);
    Design d;
    d.board = {p, p, p};
    d.pq = IntMatrix(p, p);
    d.pr = IntMatrix(p, p);
    d.qr = IntMatrix(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            std::int64_t m3 = 3 * t.square.at(i, j);
            d.pq.at(i, j) = m3 - t.a.at(i, j);
            d.pr.at(i, j) = m3 - t.b.at(i, j);
            d.qr.at(i, j) = m3 - t.c.at(i, j);
            if (adjust_diagonal && i == j) {
                d.pq.at(i, j) += 1;
                d.pr.at(i, j) -= 2;
                d.qr.at(i, j) += 1;
            }
        }
    return d;
}

}  // namespace

Design circulant_bi_design(int p) { return circulant_design(p, true); }

Design circulant_magic_design(int p) { return circulant_design(p, false); }

Design square_merged_rect_design(int p, int r) {
    require(p >= 3 && r >= 2 && r % 2 == 0, "needs p >= 3 and even r >= 2");
    MagicRectangle sq = magic_square(p, 0);
    MagicRectangle rect = magic_rectangle(2 * p, r, static_cast<std::int64_t>(p) * p);
    Design d;
    d.board = {p, p, r};
    d.pq = sq.entries;
    d.pr = IntMatrix(p, r);
    d.qr = IntMatrix(p, r);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < r; ++j) {
            d.pr.at(i, j) = rect.entries.at(i, j);
            d.qr.at(i, j) = rect.entries.at(p + i, j);
        }
    return d;
}

Design block_squares_magic_design(int p) {
    require(p >= 2 && p % 2 == 0, "needs even p >= 2");
    if (p == 2) {
        Design d;
        d.board = {2, 2, 2};
        d.pq = IntMatrix{{8, 5}, {6, 7}};
        d.pr = IntMatrix{{4, 9}, {1, 12}};
        d.qr = IntMatrix{{10, 2}, {11, 3}};
        return d;
    }
    if (p == 4) {
        Design d;
        d.board = {4, 4, 4};
        d.pq = IntMatrix{{32, 18, 19, 29}, {25, 23, 22, 28}, {17, 31, 30, 20}, {24, 26, 27, 21}};
        d.pr = IntMatrix{{48, 2, 3, 45}, {33, 15, 14, 36}, {1, 47, 46, 4}, {16, 34, 35, 13}};
        d.qr = IntMatrix{{44, 6, 7, 41}, {37, 11, 10, 40}, {5, 43, 42, 8}, {12, 38, 39, 9}};
        return d;
    }
    return substitute_blocks(block_squares_magic_design(2), p / 2);
}

}  // namespace boardmagic
