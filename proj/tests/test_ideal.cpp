#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "symladder/errors.hpp"
#include "symladder/ideal.hpp"
#include "symladder/ladder.hpp"
#include "testutil.hpp"

using namespace symladder;

namespace {

Ladder full(int n) { return from_corners(n, {}, {}); }

// Image ladder of a 2x3 matrix with a 1x1 symmetric block at its bottom-left.
Ladder rectangle24() { return validate_ladder(4, {{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}}); }

std::set<Minor> gen_set(const MixedLadderIdeal& ideal) {
    auto g = enumerate_generators(ideal);
    return {g.begin(), g.end()};
}

}  // namespace

TEST_CASE("canonical minor orientation") {
    CHECK(canonical_minor({2, 3}, {1, 3}) == Minor{{1, 3}, {2, 3}});
    CHECK(canonical_minor({1, 3}, {2, 3}) == Minor{{1, 3}, {2, 3}});
    CHECK(canonical_minor({1, 2}, {1, 2}) == Minor{{1, 2}, {1, 2}});
}

TEST_CASE("minor membership") {
    CHECK(minor_in_ladder(Minor{{1, 2}, {1, 2}}, full(2)));
    Ladder lad = validate_ladder(3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});
    // entry (rows_1, cols_2) = (1,3) is missing from the region
    CHECK_FALSE(minor_in_ladder(Minor{{1, 2}, {2, 3}}, lad));
    CHECK(minor_in_ladder(Minor{{1, 2}, {1, 2}}, lad));
    // entry (3,2) counts through its mirror (2,3)
    CHECK(minor_in_ladder(Minor{{2, 3}, {2, 3}}, lad));
}

TEST_CASE("mk_ideal validates and orders the points") {
    Ladder f3 = full(3);
    MixedLadderIdeal single = mk_ideal(f3, {{3, 3}}, {2});
    CHECK(single.points() == std::vector<Point>{{3, 3}});
    CHECK(single.sizes() == std::vector<int>{2});

    MixedLadderIdeal sorted = mk_ideal(f3, {{3, 3}, {1, 3}}, {2, 1});
    CHECK(sorted.points() == std::vector<Point>{{1, 3}, {3, 3}});
    CHECK(sorted.sizes() == std::vector<int>{1, 2});

    // mirror-form input point (3,1) lands as (1,3)
    MixedLadderIdeal mirrored = mk_ideal(f3, {{3, 1}, {3, 3}}, {1, 2});
    CHECK(mirrored.points() == std::vector<Point>{{1, 3}, {3, 3}});

    CHECK_THROWS_AS(mk_ideal(f3, {{2, 2}}, {2}), PointNotOnBorder);
    CHECK_THROWS_AS(mk_ideal(f3, {{3, 3}}, {2, 1}), LengthMismatch);
    CHECK_THROWS_AS(mk_ideal(f3, {{3, 3}}, {0}), NonPositiveSize);

    Ladder two = from_corners(4, {}, {{1, 2}});
    REQUIRE(corners(two).upper_outside == std::vector<Cell>{{1, 4}, {2, 2}});
    CHECK_THROWS_AS(mk_ideal(two, {{1, 4}}, {1}), MissingUpperOutsideCorner);

    MixedLadderIdeal zero = mk_ideal(f3, {}, {});
    CHECK(zero.s() == 0);
    CHECK(enumerate_generators(zero).empty());
    CHECK(is_normalized(zero));
    CHECK_FALSE(pivot(zero).has_value());
}

TEST_CASE("normalize drops the redundant larger size") {
    Ladder f3 = full(3);
    MixedLadderIdeal raw = mk_ideal(f3, {{2, 3}, {3, 3}}, {2, 3});
    CHECK_FALSE(is_normalized(raw));

    MixedLadderIdeal norm = normalize(raw);
    Ladder trunc = validate_ladder(3, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}});
    CHECK(norm == mk_ideal(trunc, {{2, 3}}, {2}));
    CHECK(is_normalized(norm));
    CHECK(normalize(norm) == norm);

    auto before = gen_set(raw);
    for (const Minor& g : enumerate_generators(norm)) CHECK(before.count(g) == 1);
}

TEST_CASE("normalize drops the dominated smaller point") {
    Ladder f3 = full(3);
    // both points contribute indeterminates; the second subladder swallows the first
    CHECK(normalize(mk_ideal(f3, {{1, 3}, {3, 3}}, {1, 1})) == mk_ideal(f3, {{3, 3}}, {1}));
}

TEST_CASE("normalize drops vacuous points") {
    Ladder f3 = full(3);
    // no 2-minor fits in the single-row subladder at (1,3)
    MixedLadderIdeal raw = mk_ideal(f3, {{1, 3}, {3, 3}}, {2, 2});
    CHECK(normalize(raw) == mk_ideal(f3, {{3, 3}}, {2}));
}

TEST_CASE("normalize keeps the ring when every point vanishes") {
    Ladder f2 = full(2);
    MixedLadderIdeal zero = normalize(mk_ideal(f2, {{2, 2}}, {3}));
    CHECK(zero.s() == 0);
    CHECK(zero.ladder() == f2);
    CHECK(is_normalized(zero));
    CHECK(normalize(zero) == zero);
}

TEST_CASE("normalized chain inequalities") {
    Ladder f3 = full(3);
    CHECK(is_normalized(mk_ideal(f3, {{1, 3}, {3, 3}}, {1, 2})));
    CHECK_FALSE(is_normalized(mk_ideal(f3, {{1, 3}, {3, 3}}, {1, 1})));
    CHECK_FALSE(is_normalized(mk_ideal(f3, {{3, 3}}, {4})));
}

TEST_CASE("pivot selection") {
    Ladder f3 = full(3);
    CHECK(pivot(mk_ideal(f3, {{3, 3}}, {2})) == 1);
    CHECK_THROWS_AS(pivot(mk_ideal(f3, {{2, 3}, {3, 3}}, {2, 3})), NotNormalized);

    Ladder stair = from_corners(5, {}, {{1, 4}, {2, 3}});
    REQUIRE(corners(stair).upper_outside == std::vector<Cell>{{1, 5}, {2, 4}, {3, 3}});
    MixedLadderIdeal ones = mk_ideal(stair, {{1, 5}, {2, 4}, {3, 3}}, {1, 1, 1});
    REQUIRE(is_normalized(ones));
    CHECK_FALSE(pivot(ones).has_value());

    // interleaved sizes: the largest size wins
    std::vector<Cell> cells;
    for (int i = 1; i <= 9; ++i)
        for (int j = i; j <= 9; ++j)
            if ((i <= 2 && j <= 9) || (i <= 4 && j <= 8) || (i <= 5 && j <= 5))
                cells.push_back({i, j});
    Ladder lad = validate_ladder(9, cells);
    MixedLadderIdeal interleaved = mk_ideal(lad, {{2, 9}, {4, 8}, {5, 5}}, {2, 3, 2});
    REQUIRE(is_normalized(interleaved));
    CHECK(pivot(interleaved) == 2);
}

TEST_CASE("generator enumeration") {
    Ladder f3 = full(3);
    auto gens = enumerate_generators(mk_ideal(f3, {{3, 3}}, {2}));
    std::vector<Minor> expect = {{{1, 2}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 2}, {2, 3}},
                                 {{1, 3}, {1, 3}}, {{1, 3}, {2, 3}}, {{2, 3}, {2, 3}}};
    CHECK(gens == expect);

    auto ones = enumerate_generators(mk_ideal(f3, {{3, 3}}, {1}));
    CHECK(ones.size() == f3.size());

    // row-band indeterminates plus global 2-minors
    auto mixed = enumerate_generators(mk_ideal(f3, {{2, 3}, {3, 3}}, {1, 2}));
    CHECK(mixed.size() == 11);
    CHECK(std::count(mixed.begin(), mixed.end(), Minor{{1}, {1}}) == 1);
    CHECK(std::count(mixed.begin(), mixed.end(), Minor{{2}, {3}}) == 1);
    CHECK(std::count(mixed.begin(), mixed.end(), Minor{{3}, {3}}) == 0);
}

TEST_CASE("rectangle generators match the flat matrix count") {
    auto gens = enumerate_generators(mk_ideal(rectangle24(), {{2, 4}}, {2}));
    std::vector<Minor> expect = {{{1, 2}, {2, 3}}, {{1, 2}, {2, 4}}, {{1, 2}, {3, 4}}};
    CHECK(gens == expect);
}

TEST_CASE("cogenerated ideals") {
    Ladder f3 = full(3);
    CHECK(from_cogenerated(f3, {{1, 4}}) == mk_ideal(f3, {{3, 3}}, {2}));
    CHECK(from_cogenerated(f3, {{1, 2, 4}}) == mk_ideal(f3, {{3, 3}}, {3}));
    CHECK(from_cogenerated(f3, {{2, 4}}) == mk_ideal(f3, {{1, 3}, {3, 3}}, {1, 2}));

    // every candidate point vacuous: the zero ideal in the unchanged ring
    MixedLadderIdeal zero = from_cogenerated(f3, {{1, 2, 3, 4}});
    CHECK(zero.s() == 0);
    CHECK(zero.ladder() == f3);

    // a border row with several cells contributes no extra point
    CHECK(from_cogenerated(rectangle24(), {{1, 3}}) == mk_ideal(rectangle24(), {{2, 4}}, {2}));

    CHECK_THROWS_AS(from_cogenerated(f3, {{1, 2}}), AlphaOutOfRange);  // empty size-min at (3,3)
    CHECK_THROWS_AS(from_cogenerated(f3, {{4}}), AlphaOutOfRange);
    CHECK_THROWS_AS(from_cogenerated(f3, {{1, 1}}), AlphaOutOfRange);
    CHECK_THROWS_AS(from_cogenerated(f3, {{0, 2}}), AlphaOutOfRange);
    CHECK_THROWS_AS(from_cogenerated(f3, {{1, 5}}), AlphaOutOfRange);
    CHECK_THROWS_AS(from_cogenerated(f3, {std::vector<int>{}}), AlphaOutOfRange);

    Ladder trunc = validate_ladder(3, {{1, 1}, {1, 2}, {2, 2}});
    CHECK_THROWS_AS(from_cogenerated(trunc, {{1, 3}}), PreconditionCornerMissing);
}

TEST_CASE("block-matrix embedding") {
    MixedLadderIdeal embedded = embed_block_matrix(2, 3, {2, 2}, {1, 1}, 2);
    CHECK(embedded == mk_ideal(rectangle24(), {{2, 4}}, {2}));
    CHECK(enumerate_generators(embedded).size() == 3);

    // degenerate split: the whole matrix is the symmetric block
    CHECK(embed_block_matrix(3, 3, {1, 3}, {1, 3}, 2) == mk_ideal(full(3), {{3, 3}}, {2}));

    CHECK_THROWS_AS(embed_block_matrix(2, 3, {1, 1}, {1, 1}, 2), MalformedBlocks);
    CHECK_THROWS_AS(embed_block_matrix(2, 3, {2, 2}, {2, 2}, 2), MalformedBlocks);
    CHECK_THROWS_AS(embed_block_matrix(2, 3, {1, 2}, {1, 1}, 2), MalformedBlocks);
    CHECK_THROWS_AS(embed_block_matrix(2, 3, {2, 1}, {1, 1}, 2), MalformedBlocks);
    CHECK_THROWS_AS(embed_block_matrix(3, 2, {3, 3}, {1, 1}, 2), MalformedBlocks);

    // oversize t collapses to the zero ideal but keeps the ambient ring
    MixedLadderIdeal zero = embed_block_matrix(2, 3, {2, 2}, {1, 1}, 3);
    CHECK(zero.s() == 0);
    CHECK(zero.ladder().n() == 4);
}

TEST_CASE("random ideal properties") {
    std::mt19937_64 rng(0x5eed02);
    int built = 0;
    for (const Ladder& lad : testutil::random_ladders(0x5eed02, 40)) {
        std::vector<Point> pts;
        for (Cell c : corners(lad).upper_outside) pts.push_back({c.i, c.j});
        MixedLadderIdeal ones = mk_ideal(lad, pts, std::vector<int>(pts.size(), 1));
        CHECK(is_normalized(ones));
        CHECK(enumerate_generators(ones).size() == lad.size());
        CHECK_FALSE(pivot(ones).has_value());

        MixedLadderIdeal raw = testutil::random_ideal(rng, lad);
        MixedLadderIdeal norm = normalize(raw);
        CHECK(is_normalized(norm));
        CHECK(normalize(norm) == norm);
        auto before = gen_set(raw);
        for (const Minor& g : enumerate_generators(norm)) {
            CHECK(before.count(g) == 1);
            CHECK(minor_in_ladder(g, lad));
        }
        ++built;
    }
    CHECK(built >= 30);
}
