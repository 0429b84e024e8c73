#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boardmagic/construct.hpp"
#include "boardmagic/errors.hpp"

using namespace boardmagic;

namespace {

std::array<std::int64_t, 3> constants_of(const Design& d) {
    Classification c = classify(d);
    REQUIRE(c.constants.has_value());
    return *c.constants;
}

void expect_constants(MagicClass cls, Board b, std::array<std::int64_t, 3> want) {
    Design d = construct(cls, b);
    CAPTURE(b.p);
    CAPTURE(b.q);
    CAPTURE(b.r);
    CHECK(validate(d).empty());
    CHECK(constants_of(d) == want);
}

}  // namespace

TEST_CASE("ladder layouts for (1,1,r)") {
    for (int r = 1; r <= 50; ++r) {
        CAPTURE(r);
        std::int64_t rr = r;
        expect_constants(MagicClass::Tri, {1, 1, r},
                         {(rr * rr + 5 * rr + 2) / 2, (3 * rr * rr + 5 * rr + 2) / 2, 2 * rr + 1});
    }
    CHECK(constants_of(construct_tri(Board{1, 1, 1})) == std::array<std::int64_t, 3>{4, 5, 3});
}

TEST_CASE("split layouts for (1,1,r) bi") {
    CHECK(constants_of(construct_bi(Board{1, 1, 2})) == std::array<std::int64_t, 3>{7, 9, 7});
    CHECK(constants_of(construct_bi(Board{1, 1, 4})) == std::array<std::int64_t, 3>{27, 27, 9});
    for (int r = 2; r <= 50; ++r) {
        if (r % 4 == 1) {
            CHECK_THROWS_AS(construct_bi(Board{1, 1, r}), ConstructError);
            continue;
        }
        CAPTURE(r);
        std::int64_t rr = r;
        std::array<std::int64_t, 3> want{};
        if (r % 4 == 0)
            want = {rr * rr + 5 * rr / 2 + 1, rr * rr + 5 * rr / 2 + 1, 2 * rr + 1};
        else if (r == 2)
            want = {7, 9, 7};
        else if (r % 4 == 2)
            want = {rr * rr + 3 * rr / 2 + 1, rr * rr + 3 * rr / 2 + 1, 2 * rr + 3};
        else
            want = {rr * rr + 2 * rr + 1, rr * rr + 2 * rr + 1, 2 * rr + 2};
        expect_constants(MagicClass::Bi, {1, 1, r}, want);
    }
}

TEST_CASE("corner-trimmed rectangles for (1,q,r)") {
    SUBCASE("q < r gives three distinct constants, descending for q >= 3") {
        for (auto [q, r] : std::vector<std::pair<int, int>>{{3, 5}, {3, 9}, {4, 8}, {5, 7},
                                                            {6, 10}, {9, 15}, {2, 6}}) {
            CAPTURE(q);
            CAPTURE(r);
            Design d = construct_tri(Board{1, q, r});
            auto c = constants_of(d);
            CHECK(classify(d).kind == DesignKind::TriMagic);
            if (q >= 3) {
                CHECK(c[0] > c[1]);
                CHECK(c[1] > c[2]);
            }
        }
    }
    SUBCASE("q = r gives a bi-magic design with c1 apart") {
        for (int q : {2, 3, 4, 5, 8, 11}) {
            CAPTURE(q);
            Design d = construct_bi(Board{1, q, q});
            auto c = constants_of(d);
            CHECK(classify(d).kind == DesignKind::BiMagic);
            CHECK(c[1] == c[2]);
            CHECK(c[0] != c[1]);
        }
        CHECK(constants_of(construct_bi(Board{1, 3, 3})) ==
              std::array<std::int64_t, 3>{36, 34, 34});
    }
}

TEST_CASE("stacked strips for (1, odd q, even r)") {
    SUBCASE("the (1,5,8) design matches its stored form cell for cell") {
        Design d = construct_tri(Board{1, 5, 8});
        CHECK(d.pq == IntMatrix{{3, 4, 2, 5, 1}});
        CHECK(d.pr == IntMatrix{{53, 52, 51, 50, 49, 48, 47, 46}});
        const IntMatrix want_qr{{6, 7, 8, 9, 42, 43, 44, 45},
                                {21, 20, 19, 18, 33, 32, 31, 29},
                                {22, 23, 24, 25, 26, 27, 28, 30},
                                {38, 36, 35, 34, 17, 16, 12, 14},
                                {37, 39, 40, 41, 10, 11, 15, 13}};
        CHECK(d.qr == want_qr);
        CHECK(constants_of(d) == std::array<std::int64_t, 3>{411, 207, 177});
    }
    SUBCASE("constants follow the closed forms across the family") {
        for (int s = 1; s <= 6; ++s)
            for (int k = s + 1; k <= s + 7; ++k) {
                CAPTURE(s);
                CAPTURE(k);
                Design d = stacked_design(s, k, false);
                CHECK(validate(d).empty());
                std::int64_t ss = s, kk = k;
                auto c = constants_of(d);
                CHECK(c[1] == kk * (4 * ss * kk + 4 * ss + 2 * kk + 3) + ss + 1);
                CHECK(c[2] == (ss + 1) * (4 * ss * kk + 4 * ss + 4 * kk + 3));
                CHECK(c[0] == kk * (8 * ss * kk + 4 * ss + 6 * kk + 3) + (ss + 1) * (2 * ss + 1));
            }
    }
    SUBCASE("(1,3,4) constants") {
        expect_constants(MagicClass::Tri, {1, 3, 4}, {76, 40, 46});
    }
    SUBCASE("the translated variant stays valid and shifts the constants") {
        for (auto [s, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 5}}) {
            Design d = stacked_design(s, k, true);
            CHECK(validate(d).empty());
            std::int64_t ss = s, kk = k;
            auto base = constants_of(stacked_design(s, k, false));
            auto c = constants_of(d);
            CHECK(c[1] == base[1] + 2 * kk);
            CHECK(c[2] == (ss + 1) * (4 * ss * kk + 4 * kk + 1));
            CHECK(c[0] == base[0] + (2 * ss + 1) * (4 * ss * kk + 2 * kk));
        }
    }
    SUBCASE("the translated (1,5,8) design matches its stored form") {
        Design d = stacked_design(2, 4, true);
        CHECK(d.pq == IntMatrix{{51, 52, 50, 53, 49}});
        CHECK(d.pr == IntMatrix{{48, 47, 46, 45, 44, 43, 42, 41}});
        const IntMatrix want_qr{{1, 2, 3, 4, 37, 38, 39, 40},
                                {16, 15, 14, 13, 28, 27, 26, 24},
                                {17, 18, 19, 20, 21, 22, 23, 25},
                                {33, 31, 30, 29, 12, 11, 7, 9},
                                {32, 34, 35, 36, 5, 6, 10, 8}};
        CHECK(d.qr == want_qr);
        CHECK(constants_of(d) == std::array<std::int64_t, 3>{611, 215, 147});
    }
    SUBCASE("k <= s is rejected") { CHECK_THROWS_AS(stacked_design(2, 2, false), std::invalid_argument); }
}

TEST_CASE("block product for (1, even q, odd r)") {
    SUBCASE("(1,6,9): the six-row group sums to 305, the nine columns to 248") {
        Design d = construct_tri(Board{1, 6, 9});
        CHECK(constants_of(d) == std::array<std::int64_t, 3>{768, 305, 248});
    }
    SUBCASE("(1,4,7)") {
        Design d = construct_tri(Board{1, 4, 7});
        CHECK(constants_of(d) == std::array<std::int64_t, 3>{318, 132, 102});
    }
    SUBCASE("row/column gap identity c_rows - c_cols = s(4k(k-s-1) - 1)") {
        for (int s = 2; s <= 6; ++s)
            for (int k = s + 1; k <= s + 6; ++k) {
                CAPTURE(s);
                CAPTURE(k);
                Design d = block_product_design(s, k);
                CHECK(validate(d).empty());
                auto c = constants_of(d);
                std::int64_t ss = s, kk = k;
                CHECK(c[1] - c[2] == ss * (4 * kk * (kk - ss - 1) - 1));
            }
    }
    SUBCASE("k <= s is rejected") {
        CHECK_THROWS_AS(block_product_design(2, 2), std::invalid_argument);
    }
}

TEST_CASE("frozen strip layouts") {
    SUBCASE("(1,1,8) ladder") {
        Design d = construct_tri(Board{1, 1, 8});
        CHECK(d.pq == IntMatrix{{17}});
        CHECK(d.pr == IntMatrix{{1, 2, 3, 4, 5, 6, 7, 8}});
        CHECK(d.qr == IntMatrix{{16, 15, 14, 13, 12, 11, 10, 9}});
    }
    SUBCASE("(1,1,10) split") {
        Design d = construct_bi(Board{1, 1, 10});
        CHECK(d.pq == IntMatrix{{1}});
        CHECK(d.pr == IntMatrix{{6, 16, 8, 14, 13, 12, 2, 20, 19, 5}});
        CHECK(d.qr == IntMatrix{{17, 7, 15, 9, 10, 11, 21, 3, 4, 18}});
    }
    SUBCASE("(1,2,7) paired rows after the rebalancing trades") {
        Design d = construct_tri(Board{1, 2, 7});
        CHECK(d.pq == IntMatrix{{22, 23}});
        CHECK(d.pr == IntMatrix{{1, 10, 5, 7, 14, 4, 15}});
        CHECK(d.qr == IntMatrix{{11, 20, 9, 18, 2, 16, 12}, {21, 3, 19, 8, 17, 13, 6}});
        CHECK(constants_of(d) == std::array<std::int64_t, 3>{101, 110, 33});
    }
}

TEST_CASE("two-row family for (1,2,odd r)") {
    CHECK(constants_of(construct_tri(Board{1, 2, 3})) == std::array<std::int64_t, 3>{30, 27, 16});
    for (int r = 5; r <= 49; r += 2) {
        CAPTURE(r);
        std::int64_t g = (r % 4 == 1) ? (r - 1) / 4 : (r - 3) / 4;
        std::array<std::int64_t, 3> want =
            (r % 4 == 1)
                ? std::array<std::int64_t, 3>{8 * g * g + 36 * g + 12, 32 * g * g + 27 * g + 6,
                                              18 * g + 6}
                : std::array<std::int64_t, 3>{8 * g * g + 44 * g + 49, 32 * g * g + 59 * g + 19,
                                              18 * g + 15};
        expect_constants(MagicClass::Tri, {1, 2, r}, want);
    }
}

TEST_CASE("the (2,2,r) family") {
    SUBCASE("r = 2 explicit design") {
        expect_constants(MagicClass::Tri, {2, 2, 2}, {18, 26, 34});
    }
    SUBCASE("head entries of the r = 8 strip") {
        Design d = construct_tri(Board{2, 2, 8});
        CHECK(d.pr == IntMatrix{{1, 15, 14, 4, 5, 11, 10, 8}, {16, 2, 3, 13, 12, 6, 7, 9}});
    }
    SUBCASE("constants for all r up to 50") {
        for (int r = 2; r <= 50; ++r) {
            CAPTURE(r);
            std::int64_t rr = r;
            std::array<std::int64_t, 3> want{};
            if (r == 2)
                want = {18, 26, 34};
            else if (r % 2 == 0)
                want = {rr * rr + 17 * rr / 2 + 5, 3 * rr * rr + 17 * rr / 2 + 5, 8 * rr + 2};
            else
                want = {rr * rr + (21 * rr + 5) / 2, 3 * rr * rr + (13 * rr + 15) / 2,
                        8 * rr + 2};
            expect_constants(MagicClass::Tri, {2, 2, r}, want);
        }
    }
}

TEST_CASE("(2,2,even r) bi family") {
    expect_constants(MagicClass::Bi, {2, 2, 2}, {24, 30, 24});
    for (int r = 4; r <= 50; r += 2) {
        CAPTURE(r);
        std::int64_t rr = r;
        expect_constants(MagicClass::Bi, {2, 2, r},
                         {2 * rr * rr + 17 * rr / 2 + 5, 2 * rr * rr + 17 * rr / 2 + 5,
                          8 * rr + 2});
    }
    CHECK_THROWS_AS(construct_bi(Board{2, 2, 5}), ConstructError);
}

TEST_CASE("merged-rectangle splits") {
    SUBCASE("(3,5,8) closed forms") {
        expect_constants(MagicClass::Tri, {3, 5, 8}, {620, 476, 260});
    }
    SUBCASE("a case of each parity pattern") {
        CHECK(classify(construct_tri(Board{3, 5, 12})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{3, 4, 7})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{2, 5, 9})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{4, 7, 9})).kind == DesignKind::TriMagic);
    }
    SUBCASE("same-parity three-rectangle split") {
        CHECK(classify(construct_tri(Board{3, 3, 3})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{2, 4, 6})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{5, 7, 9})).kind == DesignKind::TriMagic);
        CHECK(classify(construct_tri(Board{4, 4, 4})).kind == DesignKind::TriMagic);
    }
}

TEST_CASE("circulant triples") {
    SUBCASE("p = 3 first rows") {
        CirculantTriple t = circulant_triple(3);
        CHECK(t.a.at(0, 0) == 2);
        CHECK(t.a.at(0, 1) == 1);
        CHECK(t.a.at(0, 2) == 0);
        CHECK(verify_triple(t).empty());
    }
    SUBCASE("invariants hold for odd p up to 15") {
        for (int p = 3; p <= 15; p += 2) {
            CAPTURE(p);
            CHECK(verify_triple(circulant_triple(p)).empty());
        }
    }
    SUBCASE("p = 7 matches the published matrices") {
        CirculantTriple t = circulant_triple(7);
        const IntMatrix want_a{{2, 2, 2, 1, 0, 0, 0}, {0, 2, 2, 2, 1, 0, 0}, {0, 0, 2, 2, 2, 1, 0},
                               {0, 0, 0, 2, 2, 2, 1}, {1, 0, 0, 0, 2, 2, 2}, {2, 1, 0, 0, 0, 2, 2},
                               {2, 2, 1, 0, 0, 0, 2}};
        const IntMatrix want_b{{0, 0, 0, 2, 2, 2, 1}, {1, 0, 0, 0, 2, 2, 2}, {2, 1, 0, 0, 0, 2, 2},
                               {2, 2, 1, 0, 0, 0, 2}, {2, 2, 2, 1, 0, 0, 0}, {0, 2, 2, 2, 1, 0, 0},
                               {0, 0, 2, 2, 2, 1, 0}};
        const IntMatrix want_c{{1, 1, 1, 0, 1, 1, 2}, {2, 1, 1, 1, 0, 1, 1}, {1, 2, 1, 1, 1, 0, 1},
                               {1, 1, 2, 1, 1, 1, 0}, {0, 1, 1, 2, 1, 1, 1}, {1, 0, 1, 1, 2, 1, 1},
                               {1, 1, 0, 1, 1, 2, 1}};
        CHECK(t.a == want_a);
        CHECK(t.b == want_b);
        CHECK(t.c == want_c);
    }
    SUBCASE("even order is rejected") { CHECK_THROWS_AS(circulant_triple(4), std::invalid_argument); }
}

TEST_CASE("circulant (p,p,p) designs") {
    SUBCASE("bi constants c1 = c3 = 3p(p^2+1)-2p-1, c2 three more") {
        for (int p : {3, 5, 7, 9}) {
            CAPTURE(p);
            std::int64_t pp = p;
            std::int64_t base = 3 * pp * (pp * pp + 1) - 2 * pp;
            expect_constants(MagicClass::Bi, {p, p, p}, {base - 1, base + 2, base - 1});
        }
    }
    SUBCASE("p = 7 bi design matches the published matrices") {
        Design d = construct_bi(Board{7, 7, 7});
        const IntMatrix want_pq{
            {89, 115, 142, 2, 30, 57, 84},  {114, 140, 19, 25, 53, 81, 87},
            {138, 18, 23, 49, 76, 104, 111}, {15, 42, 48, 74, 100, 106, 134},
            {38, 45, 72, 99, 125, 130, 10}, {61, 68, 96, 123, 129, 8, 34},
            {64, 91, 119, 147, 6, 33, 59}};
        const IntMatrix want_pr{
            {88, 117, 144, 1, 28, 55, 83},  {113, 139, 21, 27, 52, 79, 85},
            {136, 17, 22, 51, 78, 103, 109}, {13, 40, 47, 73, 102, 108, 133},
            {37, 43, 70, 98, 124, 132, 12}, {63, 67, 94, 121, 128, 7, 36},
            {66, 93, 118, 145, 4, 32, 58}};
        const IntMatrix want_qr{
            {90, 116, 143, 3, 29, 56, 82},  {112, 141, 20, 26, 54, 80, 86},
            {137, 16, 24, 50, 77, 105, 110}, {14, 41, 46, 75, 101, 107, 135},
            {39, 44, 71, 97, 126, 131, 11}, {62, 69, 95, 122, 127, 9, 35},
            {65, 92, 120, 146, 5, 31, 60}};
        CHECK(d.pq == want_pq);
        CHECK(d.pr == want_pr);
        CHECK(d.qr == want_qr);
    }
    SUBCASE("magic constants m = 3p(p^2+1)-2p") {
        for (int p : {3, 5, 7, 9}) {
            CAPTURE(p);
            std::int64_t pp = p;
            std::int64_t m = 3 * pp * (pp * pp + 1) - 2 * pp;
            expect_constants(MagicClass::Magic, {p, p, p}, {m, m, m});
        }
    }
    SUBCASE("p = 7 magic design matches the published matrices") {
        Design d = construct_magic(Board{7, 7, 7});
        const IntMatrix want_pq{
            {88, 115, 142, 2, 30, 57, 84},  {114, 139, 19, 25, 53, 81, 87},
            {138, 18, 22, 49, 76, 104, 111}, {15, 42, 48, 73, 100, 106, 134},
            {38, 45, 72, 99, 124, 130, 10}, {61, 68, 96, 123, 129, 7, 34},
            {64, 91, 119, 147, 6, 33, 58}};
        const IntMatrix want_pr{
            {90, 117, 144, 1, 28, 55, 83},  {113, 141, 21, 27, 52, 79, 85},
            {136, 17, 24, 51, 78, 103, 109}, {13, 40, 47, 75, 102, 108, 133},
            {37, 43, 70, 98, 126, 132, 12}, {63, 67, 94, 121, 128, 9, 36},
            {66, 93, 118, 145, 4, 32, 60}};
        const IntMatrix want_qr{
            {89, 116, 143, 3, 29, 56, 82},  {112, 140, 20, 26, 54, 80, 86},
            {137, 16, 23, 50, 77, 105, 110}, {14, 41, 46, 74, 101, 107, 135},
            {39, 44, 71, 97, 125, 131, 11}, {62, 69, 95, 122, 127, 8, 35},
            {65, 92, 120, 146, 5, 31, 59}};
        CHECK(d.pq == want_pq);
        CHECK(d.pr == want_pr);
        CHECK(d.qr == want_qr);
    }
}

TEST_CASE("block-square substitutions") {
    expect_constants(MagicClass::Bi, {4, 4, 4}, {180, 228, 180});
    expect_constants(MagicClass::Bi, {6, 6, 6}, {600, 762, 600});  // 22n^3+2n / 28n^3+2n at n=3
    expect_constants(MagicClass::Bi, {8, 8, 8}, {1416, 1800, 1416});
    expect_constants(MagicClass::Magic, {2, 2, 2}, {26, 26, 26});
    expect_constants(MagicClass::Magic, {4, 4, 4}, {196, 196, 196});
    expect_constants(MagicClass::Magic, {6, 6, 6}, {654, 654, 654});
    expect_constants(MagicClass::Magic, {8, 8, 8}, {1544, 1544, 1544});  // p(3p^2+1)
}

TEST_CASE("square-plus-rectangle bi layouts") {
    SUBCASE("(p,p,r) with even r") {
        for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 2}, {3, 4}, {3, 6}, {5, 4},
                                                            {4, 6}, {7, 2}}) {
            CAPTURE(p);
            CAPTURE(r);
            Design d = construct_bi(Board{p, p, r});
            auto c = constants_of(d);
            CHECK(c[0] == c[1]);
            CHECK(c[0] != c[2]);
        }
    }
    SUBCASE("pair above: (2,5,5) and friends") {
        for (auto [p, t] : std::vector<std::pair<int, int>>{{2, 5}, {4, 5}, {2, 3}, {6, 7}}) {
            CAPTURE(p);
            CAPTURE(t);
            Design d = construct_bi(Board{p, t, t});
            auto c = constants_of(d);
            CHECK(c[1] == c[2]);
            CHECK(c[0] != c[1]);
        }
    }
    SUBCASE("odd single with odd pair stays open") {
        CHECK_THROWS_AS(construct_bi(Board{3, 5, 5}), ConstructError);
        CHECK_THROWS_AS(construct_bi(Board{3, 3, 5}), ConstructError);
    }
}

TEST_CASE("impossibility and coverage errors carry rules") {
    auto expect_error = [&](MagicClass cls, Board b, ConstructError::Kind kind,
                            const std::string& rule) {
        try {
            construct(cls, b);
            FAIL("expected ConstructError");
        } catch (const ConstructError& e) {
            CHECK(e.kind == kind);
            CHECK(e.rule == rule);
        }
    };
    expect_error(MagicClass::Bi, {1, 1, 5}, ConstructError::Kind::proven_impossible,
                 "split-parity");
    expect_error(MagicClass::Bi, {1, 1, 9}, ConstructError::Kind::proven_impossible,
                 "split-parity");
    expect_error(MagicClass::Magic, {1, 2, 3}, ConstructError::Kind::proven_impossible,
                 "flat-board");
    expect_error(MagicClass::Magic, {3, 3, 6}, ConstructError::Kind::proven_impossible,
                 "proportional-sides");
    expect_error(MagicClass::Magic, {2, 2, 3}, ConstructError::Kind::proven_impossible,
                 "sum-divisibility");
    expect_error(MagicClass::Tri, {1, 4, 4}, ConstructError::Kind::not_covered,
                 "open-flat-equal-pair");
    expect_error(MagicClass::Tri, {3, 3, 8}, ConstructError::Kind::not_covered,
                 "open-odd-pair-even-single");
    expect_error(MagicClass::Tri, {2, 5, 5}, ConstructError::Kind::not_covered,
                 "open-even-single-odd-pair");
    expect_error(MagicClass::Tri, {2, 3, 4}, ConstructError::Kind::not_covered, "open-two-even");
    expect_error(MagicClass::Magic, {3, 4, 5}, ConstructError::Kind::not_covered, "unsettled");
}

TEST_CASE("fixtures") {
    CHECK(fixture_names().size() == 5);
    SUBCASE("classifications and constants") {
        CHECK(constants_of(fixture("bimagic-1-2-3")) == std::array<std::int64_t, 3>{23, 23, 21});
        CHECK(constants_of(fixture("trimagic-1-3-3")) == std::array<std::int64_t, 3>{54, 32, 30});
        CHECK(constants_of(fixture("trimagic-2-3-3")) == std::array<std::int64_t, 3>{93, 40, 52});
        CHECK(constants_of(fixture("trimagic-1-2-2")) == std::array<std::int64_t, 3>{20, 15, 11});
        CHECK(constants_of(fixture("trimagic-1-1-2-alt")) ==
              std::array<std::int64_t, 3>{10, 8, 6});
    }
    SUBCASE("fixture boards route through the dispatchers") {
        CHECK(constants_of(construct_tri(Board{1, 3, 3})) ==
              std::array<std::int64_t, 3>{54, 32, 30});
        CHECK(constants_of(construct_tri(Board{2, 3, 3})) ==
              std::array<std::int64_t, 3>{93, 40, 52});
        CHECK(constants_of(construct_tri(Board{1, 2, 2})) ==
              std::array<std::int64_t, 3>{20, 15, 11});
        CHECK(constants_of(construct_bi(Board{1, 2, 3})) ==
              std::array<std::int64_t, 3>{23, 23, 21});
    }
    SUBCASE("unknown name") { CHECK_THROWS_AS(fixture("nope"), std::invalid_argument); }
}

TEST_CASE("permutation transport") {
    Design d = construct_tri(Board{8, 5, 1});
    CHECK(d.board == Board{8, 5, 1});
    CHECK(constants_of(d) == std::array<std::int64_t, 3>{177, 207, 411});
    Design e = construct_magic(Board{4, 4, 4});
    CHECK(constants_of(e)[0] == 196);
}
