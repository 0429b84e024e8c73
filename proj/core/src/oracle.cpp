#include "boardmagic/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "boardmagic/errors.hpp"

namespace boardmagic {

namespace {

using Clock = std::chrono::steady_clock;

struct Cell {
    int matrix;  // 0 = pq, 1 = pr, 2 = qr
    int i, j;
    int line_a;  // first group line index
    int line_b;  // second group line index
};

struct Tuple {
    std::int64_t c1, c2, c3;
};

struct Shared {
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> exceeded{false};
    Clock::time_point deadline;
    std::int64_t max_nodes = 0;
};

class TupleSearch {
public:
    TupleSearch(const Board& b, const SearchOptions& opt, Shared& shared)
        : b_(b), opt_(opt), shared_(shared), total_(b.total_squares()) {
        // cell order: pq row-major, then pr, then qr
        for (int i = 0; i < b.p; ++i)
            for (int j = 0; j < b.q; ++j) cells_.push_back({0, i, j, i, b.p + j});
        for (int i = 0; i < b.p; ++i)
            for (int j = 0; j < b.r; ++j) cells_.push_back({1, i, j, i, b.p + b.q + j});
        for (int i = 0; i < b.q; ++i)
            for (int j = 0; j < b.r; ++j) cells_.push_back({2, i, j, b.p + i, b.p + b.q + j});
        line_sum_.resize(b.p + b.q + b.r);
        line_remaining_.resize(line_sum_.size());
        line_target_.resize(line_sum_.size());
    }

    // Runs one constant-tuple branch. first_label, when set, pins the label
    // of the first cell (used to partition work across workers).
    bool run(const Tuple& t, std::optional<std::int64_t> first_label, Design& out) {
        for (int i = 0; i < b_.p; ++i) line_target_[i] = t.c1;
        for (int j = 0; j < b_.q; ++j) line_target_[b_.p + j] = t.c2;
        for (int k = 0; k < b_.r; ++k) line_target_[b_.p + b_.q + k] = t.c3;
        std::fill(line_sum_.begin(), line_sum_.end(), 0);
        for (int i = 0; i < b_.p; ++i) line_remaining_[i] = b_.q + b_.r;
        for (int j = 0; j < b_.q; ++j) line_remaining_[b_.p + j] = b_.p + b_.r;
        for (int k = 0; k < b_.r; ++k) line_remaining_[b_.p + b_.q + k] = b_.p + b_.q;
        used_ = 0;
        design_.board = b_;
        design_.pq = IntMatrix(b_.p, b_.q);
        design_.pr = IntMatrix(b_.p, b_.r);
        design_.qr = IntMatrix(b_.q, b_.r);
        first_label_ = first_label;
        if (fill(0)) {
            out = design_;
            return true;
        }
        return false;
    }

private:
    bool out_of_budget() {
        std::int64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if ((n & 1023) == 0) {
            if (n > shared_.max_nodes || Clock::now() > shared_.deadline) {
                shared_.exceeded.store(true);
                shared_.stop.store(true);
            }
        }
        return shared_.stop.load(std::memory_order_relaxed);
    }

    bool line_ok(int line, std::int64_t placed) {
        const std::int64_t sum = line_sum_[line] + placed;
        const int rem = line_remaining_[line] - 1;
        const std::int64_t target = line_target_[line];
        if (rem == 0) return sum == target;
        if (opt_.prune_partial_sums && sum >= target) return false;
        if (opt_.prune_completion_bounds) {
            // the line's remaining cells draw distinct unused labels
            std::int64_t lo = 0, hi = 0;
            int cnt = 0;
            for (std::int64_t v = 1; v <= total_ && cnt < rem; ++v)
                if (!(used_ >> v & 1) && v != placed) {
                    lo += v;
                    ++cnt;
                }
            cnt = 0;
            for (std::int64_t v = total_; v >= 1 && cnt < rem; --v)
                if (!(used_ >> v & 1) && v != placed) {
                    hi += v;
                    ++cnt;
                }
            if (sum + lo > target || sum + hi < target) return false;
        }
        return true;
    }

    bool symmetry_ok(const Cell& c, std::int64_t v) const {
        if (!opt_.symmetry_reduction) return true;
        // interchangeable p-rows: first pq column ascending
        if (c.matrix == 0 && c.j == 0 && c.i > 0 && v < design_.pq.at(c.i - 1, 0)) return false;
        // interchangeable r-columns: first pr row ascending
        if (c.matrix == 1 && c.i == 0 && c.j > 0 && v < design_.pr.at(0, c.j - 1)) return false;
        return true;
    }

    bool fill(std::size_t idx) {
        if (idx == cells_.size()) return true;
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        const Cell& c = cells_[idx];
        for (std::int64_t v = 1; v <= total_; ++v) {
            if (used_ >> v & 1) continue;
            if (idx == 0 && first_label_ && v != *first_label_) continue;
            if (!symmetry_ok(c, v)) continue;
            if (!line_ok(c.line_a, v)) continue;
            {
                // both lines see the label, so stage it for the second check
                line_sum_[c.line_a] += v;
                --line_remaining_[c.line_a];
                bool ok = line_ok(c.line_b, v);
                line_sum_[c.line_a] -= v;
                ++line_remaining_[c.line_a];
                if (!ok) continue;
            }
            if (out_of_budget()) return false;
            used_ |= std::int64_t{1} << v;
            line_sum_[c.line_a] += v;
            line_sum_[c.line_b] += v;
            --line_remaining_[c.line_a];
            --line_remaining_[c.line_b];
            (c.matrix == 0 ? design_.pq : c.matrix == 1 ? design_.pr : design_.qr).at(c.i, c.j) = v;
            if (fill(idx + 1)) return true;
            used_ &= ~(std::int64_t{1} << v);
            line_sum_[c.line_a] -= v;
            line_sum_[c.line_b] -= v;
            ++line_remaining_[c.line_a];
            ++line_remaining_[c.line_b];
        }
        return false;
    }

    Board b_;
    SearchOptions opt_;
    Shared& shared_;
    std::int64_t total_;
    std::vector<Cell> cells_;
    std::vector<std::int64_t> line_sum_, line_target_;
    std::vector<int> line_remaining_;
    std::int64_t used_ = 0;
    Design design_;
    std::optional<std::int64_t> first_label_;
};

std::vector<Tuple> feasible_tuples(const Board& b, MagicClass cls) {
    const std::int64_t total = b.total_squares();
    const std::int64_t double_count = total * (total + 1);
    auto line_min = [&](int size) { return static_cast<std::int64_t>(size) * (size + 1) / 2; };
    auto line_max = [&](int size) {
        return static_cast<std::int64_t>(size) * total - static_cast<std::int64_t>(size) * (size - 1) / 2;
    };
    const std::int64_t x_lo = line_min(b.q + b.r), x_hi = line_max(b.q + b.r);
    const std::int64_t y_lo = line_min(b.p + b.r), y_hi = line_max(b.p + b.r);
    const std::int64_t z_lo = line_min(b.p + b.q), z_hi = line_max(b.p + b.q);

    std::vector<Tuple> tuples;
    if (cls == MagicClass::Magic) {
        if (double_count % (b.p + b.q + b.r) == 0) {
            std::int64_t m = double_count / (b.p + b.q + b.r);
            if (m >= x_lo && m <= x_hi && m >= y_lo && m <= y_hi && m >= z_lo && m <= z_hi)
                tuples.push_back({m, m, m});
        }
        return tuples;
    }
    for (std::int64_t c1 = x_lo; c1 <= x_hi; ++c1)
        for (std::int64_t c2 = y_lo; c2 <= y_hi; ++c2) {
            std::int64_t rest = double_count - b.p * c1 - b.q * c2;
            if (rest % b.r != 0) continue;
            std::int64_t c3 = rest / b.r;
            if (c3 < z_lo || c3 > z_hi) continue;
            int distinct = 1 + (c2 != c1) + (c3 != c1 && c3 != c2);
            if (cls == MagicClass::Tri && distinct != 3) continue;
            if (cls == MagicClass::Bi && distinct != 2) continue;
            tuples.push_back({c1, c2, c3});
        }
    return tuples;
}

}  // namespace

const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::Found: return "found";
        case SearchVerdict::ProvenNonexistent: return "proven-nonexistent";
        case SearchVerdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchOutcome search(const Board& b, MagicClass cls, const SearchBudget& budget,
                     const SearchOptions& options) {
    if (!b.valid()) throw std::invalid_argument("board dimensions must be >= 1");
    if (budget.max_squares > 62)
        throw std::invalid_argument("square caps above 62 are not representable");
    const std::int64_t total = b.total_squares();
    if (total > budget.max_squares)
        throw BoardTooLarge("board has " + std::to_string(total) +
                            " squares, over the cap of " + std::to_string(budget.max_squares));

    const auto start = Clock::now();
    Shared shared;
    shared.deadline = start + budget.time_limit;
    shared.max_nodes = budget.max_nodes;

    auto tuples = feasible_tuples(b, cls);
    SearchOutcome out;

    const int workers = std::max(1, options.workers);
    if (workers == 1) {
        TupleSearch searcher(b, options, shared);
        for (const Tuple& t : tuples) {
            Design d;
            if (searcher.run(t, std::nullopt, d)) {
                out.verdict = SearchVerdict::Found;
                out.witness = std::move(d);
                break;
            }
            if (shared.stop.load()) break;
        }
    } else {
        // tasks: one per (tuple, label of the first cell)
        struct Task {
            std::size_t tuple;
            std::int64_t first;
        };
        std::vector<Task> tasks;
        for (std::size_t t = 0; t < tuples.size(); ++t)
            for (std::int64_t v = 1; v <= total; ++v) tasks.push_back({t, v});
        std::atomic<std::size_t> next{0};
        std::mutex result_mu;
        std::optional<Design> found;
        auto work = [&]() {
            TupleSearch searcher(b, options, shared);
            while (!shared.stop.load(std::memory_order_relaxed)) {
                std::size_t mine = next.fetch_add(1);
                if (mine >= tasks.size()) break;
                Design d;
                if (searcher.run(tuples[tasks[mine].tuple], tasks[mine].first, d)) {
                    std::lock_guard<std::mutex> lock(result_mu);
                    if (!found) found = std::move(d);
                    shared.stop.store(true);
                    break;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (found) {
            out.verdict = SearchVerdict::Found;
            out.witness = std::move(found);
        }
    }

    if (out.verdict != SearchVerdict::Found)
        out.verdict = shared.exceeded.load() ? SearchVerdict::BudgetExceeded
                                             : SearchVerdict::ProvenNonexistent;
    if (out.witness) {
        if (!validate(*out.witness).empty() || !classify(*out.witness).is(cls))
            throw std::logic_error("search produced an unsound witness");
    }
    out.nodes_explored = shared.nodes.load();
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
}

std::map<MagicClass, SearchOutcome> classify_all(const Board& b, const SearchBudget& budget,
                                                 const SearchOptions& options) {
    std::map<MagicClass, SearchOutcome> out;
    for (MagicClass cls : {MagicClass::Tri, MagicClass::Bi, MagicClass::Magic})
        out.emplace(cls, search(b, cls, budget, options));
    return out;
}

}  // namespace boardmagic
