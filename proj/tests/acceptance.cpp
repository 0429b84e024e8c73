// Acceptance suite: runs every guaranteed behavior end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "boardmagic/construct.hpp"
#include "boardmagic/document.hpp"
#include "boardmagic/feasibility.hpp"
#include "boardmagic/oracle.hpp"

using namespace boardmagic;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream os;
        os << what << ": mismatch";
        throw Failure(os.str());
    }
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::array<std::int64_t, 3> constants_of(const Design& d) {
    Classification c = classify(d);
    expect(c.constants.has_value(), "profile is not constant");
    return *c.constants;
}

// --- criterion 1: published tri-magic constants ---------------------------

void criterion_constants() {
    expect_eq(constants_of(construct_tri(Board{1, 5, 8})), {411, 207, 177}, "(1,5,8)");
    // For the even/odd block-product family the published summary lists the
    // column constant second; per group the (1,6,9) design has q-rows of 305
    // and r-columns of 248, i.e. the constants {768, 248, 305} exactly.
    expect_eq(constants_of(construct_tri(Board{1, 6, 9})), {768, 305, 248}, "(1,6,9)");
    expect_eq(constants_of(construct_tri(Board{1, 4, 7})), {318, 132, 102}, "(1,4,7)");
}

// --- criterion 2: magic constants -----------------------------------------

void criterion_magic() {
    for (auto [p, m] : std::vector<std::pair<int, std::int64_t>>{{2, 26}, {4, 196}, {6, 654}}) {
        Design d = construct_magic(Board{p, p, p});
        expect_eq(constants_of(d), {m, m, m}, "(" + std::to_string(p) + ")^3");
    }
    for (int p : {3, 5, 7, 9}) {
        const std::int64_t m = 3ll * p * (static_cast<std::int64_t>(p) * p + 1) - 2 * p;
        Design d = construct_magic(Board{p, p, p});
        expect(classify(d).kind == DesignKind::Magic, "odd cube classify");
        expect_eq(constants_of(d), {m, m, m}, "odd (" + std::to_string(p) + ")^3");
    }
}

// --- criterion 3: bi-magic constants ---------------------------------------

void criterion_bi() {
    expect_eq(constants_of(construct_bi(Board{4, 4, 4})), {180, 228, 180}, "(4,4,4)");
    expect_eq(constants_of(construct_bi(Board{1, 1, 2})), {7, 9, 7}, "(1,1,2)");
    for (int p : {3, 5, 7}) {
        const std::int64_t base = 3ll * p * (static_cast<std::int64_t>(p) * p + 1) - 2 * p - 1;
        expect_eq(constants_of(construct_bi(Board{p, p, p})), {base, base + 3, base},
                  "odd (" + std::to_string(p) + ")^3");
    }
}

// --- criterion 4: construction sweep to 30 ---------------------------------

void criterion_sweep() {
    int built = 0;
    for (int p = 1; p <= 30; ++p)
        for (int q = p; q <= 30; ++q)
            for (int r = q; r <= 30; ++r) {
                Board b{p, q, r};
                for (MagicClass cls : {MagicClass::Tri, MagicClass::Bi, MagicClass::Magic}) {
                    if (known_status(b, cls).verdict != Verdict::ProvenYes) continue;
                    Design d = construct(cls, b);
                    if (!validate(d).empty())
                        throw Failure("invalid design for " + std::to_string(p) + "," +
                                      std::to_string(q) + "," + std::to_string(r));
                    if (!classify(d).is(cls))
                        throw Failure("class mismatch for " + std::to_string(p) + "," +
                                      std::to_string(q) + "," + std::to_string(r));
                    ++built;
                }
            }
    expect(built > 3000, "sweep covered suspiciously few boards");
    std::cout << "  (swept " << built << " covered board/class pairs)\n";
}

// --- criterion 5: oracle/catalog concordance -------------------------------

void criterion_oracle() {
    std::vector<Board> boards;
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 6; ++q)
            for (int r = q; r <= 12; ++r)
                if (Board{p, q, r}.total_squares() <= 12) boards.push_back({p, q, r});
    boards.push_back({1, 1, 5});

    SearchBudget budget;
    budget.max_squares = 12;
    for (const Board& b : boards) {
        if (b.total_squares() > 12) budget.max_squares = 16;
        for (MagicClass cls : {MagicClass::Tri, MagicClass::Bi, MagicClass::Magic}) {
            SearchOutcome res = search(b, cls, budget);
            expect(res.verdict != SearchVerdict::BudgetExceeded, "oracle ran out of budget");
            KnownStatus st = known_status(b, cls);
            std::ostringstream tag;
            tag << "(" << b.p << "," << b.q << "," << b.r << ") " << to_string(cls);
            if (st.verdict == Verdict::ProvenYes)
                expect(res.verdict == SearchVerdict::Found, tag.str() + ": catalog says yes");
            if (st.verdict == Verdict::ProvenNo)
                expect(res.verdict == SearchVerdict::ProvenNonexistent,
                       tag.str() + ": catalog says no");
            if (res.verdict == SearchVerdict::Found) {
                expect(validate(*res.witness).empty(), tag.str() + ": unsound witness");
                expect(classify(*res.witness).is(cls), tag.str() + ": wrong witness class");
            }
        }
        budget.max_squares = 12;
    }

    // the (1,1,r) split-existence boundary, r = 1..5
    for (int r = 1; r <= 5; ++r) {
        SearchBudget wide;
        wide.max_squares = 12;
        SearchOutcome res = search(Board{1, 1, r}, MagicClass::Bi, wide);
        bool exists = (r % 4 != 1) && r >= 2;
        expect((res.verdict == SearchVerdict::Found) == exists,
               "(1,1," + std::to_string(r) + ") bi existence");
    }
    // no magic design on any flat board in range; (1,1,1) not magic but tri
    for (const Board& b : boards)
        if (b.p == 1) {
            SearchOutcome res = search(b, MagicClass::Magic, budget);
            expect(res.verdict == SearchVerdict::ProvenNonexistent, "flat board magic verdict");
        }
    expect(search(Board{1, 1, 1}, MagicClass::Tri, budget).verdict == SearchVerdict::Found,
           "(1,1,1) tri");
}

// --- criterion 6: building-block properties --------------------------------

void criterion_blocks() {
    for (std::int64_t off : {-1, 0, 17})
        for (int h = 1; h <= 40; ++h)
            for (int k = 1; k <= 40; ++k) {
                bool admissible = (h == 1 && k == 1) || (h == k && h != 2) ||
                                  (h != k && h >= 2 && k >= 2 && h % 2 == k % 2);
                if (!admissible) continue;
                MagicRectangle m = magic_rectangle(h, k, off);
                auto issues = verify_rectangle(m);
                if (!issues.empty())
                    throw Failure(std::to_string(h) + "x" + std::to_string(k) + " offset " +
                                  std::to_string(off) + ": " + issues.front());
                const std::int64_t n = static_cast<std::int64_t>(h) * k;
                expect(m.row_constant() == k * (n + 1) / 2 + k * off, "row constant formula");
                expect(m.col_constant() == h * (n + 1) / 2 + h * off, "column constant formula");
            }
}

// --- criterion 7: circulant triples -----------------------------------------

void criterion_circulant() {
    for (int p = 3; p <= 15; p += 2) {
        CirculantTriple t = circulant_triple(p);
        auto issues = verify_triple(t);
        if (!issues.empty()) throw Failure("p=" + std::to_string(p) + ": " + issues.front());
    }
    CirculantTriple t = circulant_triple(7);
    const IntMatrix a{{2, 2, 2, 1, 0, 0, 0}, {0, 2, 2, 2, 1, 0, 0}, {0, 0, 2, 2, 2, 1, 0},
                      {0, 0, 0, 2, 2, 2, 1}, {1, 0, 0, 0, 2, 2, 2}, {2, 1, 0, 0, 0, 2, 2},
                      {2, 2, 1, 0, 0, 0, 2}};
    const IntMatrix b{{0, 0, 0, 2, 2, 2, 1}, {1, 0, 0, 0, 2, 2, 2}, {2, 1, 0, 0, 0, 2, 2},
                      {2, 2, 1, 0, 0, 0, 2}, {2, 2, 2, 1, 0, 0, 0}, {0, 2, 2, 2, 1, 0, 0},
                      {0, 0, 2, 2, 2, 1, 0}};
    const IntMatrix c{{1, 1, 1, 0, 1, 1, 2}, {2, 1, 1, 1, 0, 1, 1}, {1, 2, 1, 1, 1, 0, 1},
                      {1, 1, 2, 1, 1, 1, 0}, {0, 1, 1, 2, 1, 1, 1}, {1, 0, 1, 1, 2, 1, 1},
                      {1, 1, 0, 1, 1, 2, 1}};
    expect_eq(t.a, a, "p=7 shift matrix A");
    expect_eq(t.b, b, "p=7 shift matrix B");
    expect_eq(t.c, c, "p=7 shift matrix C");
}

// --- criterion 8: stored designs --------------------------------------------

void criterion_fixtures() {
    auto roundtrip = [&](const std::string& name) {
        Design d = from_document(to_document(fixture(name)));
        expect(validate(d).empty(), name + " failed verification");
        return d;
    };
    {
        Design d = roundtrip("bimagic-1-2-3");
        expect(classify(d).kind == DesignKind::BiMagic, "bimagic-1-2-3 class");
        expect_eq(constants_of(d), {23, 23, 21}, "bimagic-1-2-3 constants");
    }
    {
        Design d = roundtrip("trimagic-1-3-3");
        expect(classify(d).kind == DesignKind::TriMagic, "trimagic-1-3-3 class");
        expect_eq(constants_of(d), {54, 32, 30}, "trimagic-1-3-3 constants");
    }
    {
        Design d = roundtrip("trimagic-2-3-3");
        expect(classify(d).kind == DesignKind::TriMagic, "trimagic-2-3-3 class");
        expect_eq(constants_of(d), {93, 40, 52}, "trimagic-2-3-3 constants");
    }
    {
        Design d = construct_tri(Board{1, 1, 1});
        auto c = constants_of(d);
        expect_eq(c, {4, 5, 3}, "(1,1,1) constants");
        expect(is_pythagorean(c), "(1,1,1) should be pythagorean");
    }
}

// --- criterion 9: magic label-sum identities --------------------------------

void criterion_identities() {
    for (int p : {2, 3, 4, 5, 6, 7, 9}) {
        MagicIdentityCheck chk = magic_identities(construct_magic(Board{p, p, p}));
        expect(chk.all_zero, "residuals for (" + std::to_string(p) + ")^3");
    }
    SearchOutcome res = search(Board{2, 2, 2}, MagicClass::Magic);
    expect(res.verdict == SearchVerdict::Found, "(2,2,2) oracle witness");
    expect(magic_identities(*res.witness).all_zero, "residuals for the oracle witness");
}

struct Criterion {
    int id;
    const char* what;
    double limit_seconds;
    std::function<void()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "published tri-magic constants", 1.0, criterion_constants},
        {2, "magic constants", 1.0, criterion_magic},
        {3, "bi-magic constants", 5.0, criterion_bi},
        {4, "construction sweep to 30", 60.0, criterion_sweep},
        {5, "oracle/catalog concordance", 300.0, criterion_oracle},
        {6, "building-block properties", 10.0, criterion_blocks},
        {7, "circulant triples", 5.0, criterion_circulant},
        {8, "stored designs", 5.0, criterion_fixtures},
        {9, "magic label-sum identities", 30.0, criterion_identities},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool too_slow = seconds > c.limit_seconds;
        if (error.empty() && !too_slow) {
            std::printf("criterion %d (%s): PASS (%.2fs)\n", c.id, c.what, seconds);
        } else {
            ++failures;
            if (!error.empty())
                std::printf("criterion %d (%s): FAIL: %s\n", c.id, c.what, error.c_str());
            else
                std::printf("criterion %d (%s): FAIL: took %.2fs, limit %.0fs\n", c.id, c.what,
                            seconds, c.limit_seconds);
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
