#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hexamoment/enumdp.hpp"
#include "hexamoment/pp.hpp"

using namespace hexamoment;

TEST_CASE("validation accepts and rejects the right matrices") {
  CHECK(validate({{0}}, BoxDims(1, 1, 1)).entry(1, 1) == 0);
  CHECK_THROWS_AS(validate({{2}}, BoxDims(1, 1, 1)), EntryOutOfRangeError);
  CHECK_THROWS_AS(validate({{1, 2}, {0, 0}}, BoxDims(2, 2, 2)), NotDecreasingError);
  CHECK_THROWS_AS(validate({{1, 1}}, BoxDims(2, 2, 2)), BadShapeError);
  CHECK_THROWS_AS(validate({{1}, {1}}, BoxDims(2, 2, 2)), BadShapeError);
  CHECK_THROWS_AS(validate({{0, 0}, {1, 0}}, BoxDims(2, 2, 2)), NotDecreasingError);
  CHECK_THROWS_AS(BoxDims(0, 1, 1), Error);

  try {
    validate({{1, 2}, {0, 0}}, BoxDims(2, 2, 2));
    FAIL("expected a NotDecreasingError");
  } catch (const NotDecreasingError& e) {
    CHECK(e.axis == Axis::Row);
    CHECK(e.row == 1);
  }
}

TEST_CASE("complementation") {
  CHECK(complement(validate({{0}}, BoxDims(1, 1, 1))) == validate({{1}}, BoxDims(1, 1, 1)));
  const BoxDims d(3, 4, 2);
  CHECK(complement(PlanePartition::zero(d)) ==
        validate({{2, 2, 2, 2}, {2, 2, 2, 2}, {2, 2, 2, 2}}, d));
  // a self-complementary plane partition in the 2x2x2 box
  const PlanePartition sc = validate({{2, 1}, {1, 0}}, BoxDims(2, 2, 2));
  CHECK(complement(sc) == sc);
}

TEST_CASE("complement and transpose-complement are involutions") {
  // exhaustive over every box whose volume is at most 27
  for (int a = 1; a <= 27; ++a)
    for (int b = 1; a * b <= 27; ++b)
      for (int c = 1; a * b * c <= 27; ++c) {
        const BoxDims d(a, b, c);
        for (const PlanePartition& pp : enumerate_box(d)) {
          CHECK(complement(complement(pp)) == pp);
          if (a == b) CHECK(transpose_complement(transpose_complement(pp)) == pp);
        }
      }
}

TEST_CASE("transpose-complement handles the published cases") {
  CHECK(transpose_complement(validate({{0}}, BoxDims(1, 1, 1))) ==
        validate({{1}}, BoxDims(1, 1, 1)));
  const BoxDims d(2, 2, 1);
  CHECK(transpose_complement(validate({{1, 0}, {0, 0}}, d)) == validate({{1, 1}, {1, 0}}, d));
  CHECK_THROWS_AS(transpose_complement(PlanePartition::zero(BoxDims(2, 3, 1))), NotSquareError);
}

TEST_CASE("row shifts") {
  const BoxDims d(2, 1, 1);
  const ShiftedArray sa = shift_rows(validate({{1}, {0}}, d));
  CHECK(sa.entry(1, 1) == 2);
  CHECK(sa.entry(2, 1) == 0);

  for (const PlanePartition& pp : enumerate_box(BoxDims(2, 2, 2)))
    CHECK(unshift_rows(shift_rows(pp)) == pp);

  // strictly decreasing columns across the whole 3x3x3 box; the shifted
  // constructor itself enforces the strictness
  for (const PlanePartition& pp : enumerate_box(BoxDims(3, 3, 3))) {
    const ShiftedArray sa3 = shift_rows(pp);
    for (int j = 1; j <= 3; ++j)
      for (int i = 1; i < 3; ++i) CHECK(sa3.entry(i, j) > sa3.entry(i + 1, j));
  }
}

TEST_CASE("content sequences") {
  const ShiftedArray sa = shift_rows(validate({{1}, {0}}, BoxDims(2, 1, 1)));
  const ContentSeq mu = content(sa);
  REQUIRE(mu.size() == 3);
  CHECK(mu[0] == 1);
  CHECK(mu[1] == 0);
  CHECK(mu[2] == 1);

  const ContentSeq flat = content(shift_rows(PlanePartition::zero(BoxDims(1, 5, 2))));
  CHECK(flat[0] == 5);

  for (const PlanePartition& pp : enumerate_box(BoxDims(2, 3, 2))) {
    const ContentSeq m = content(shift_rows(pp));
    long total = 0;
    for (long v : m) total += v;
    CHECK(total == 6);
  }
}

TEST_CASE("content-swap toggle on single rows") {
  // with one row there are no column pins, so the toggle must act as the
  // full multiset swap on every row
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 3; ++c) {
      const BoxDims d(1, b, c);
      for (const PlanePartition& pp : enumerate_box(d)) {
        const ShiftedArray sa = shift_rows(pp);
        for (int j = 0; j + 1 <= c; ++j) {
          const ShiftedArray swapped = bender_knuth_swap(sa, j);
          ContentSeq nu = content(swapped);
          std::swap(nu[static_cast<std::size_t>(j)], nu[static_cast<std::size_t>(j + 1)]);
          CHECK(nu == content(sa));
          CHECK(bender_knuth_swap(swapped, j) == sa);
        }
      }
    }

  // one j and no j+1: the j moves
  const ShiftedArray row = shift_rows(validate({{1, 0, 0}}, BoxDims(1, 3, 2)));
  const ShiftedArray toggled = bender_knuth_swap(row, 1);
  CHECK(toggled.entry(1, 1) == 2);
  CHECK(toggled.entry(1, 2) == 0);
  CHECK(toggled.entry(1, 3) == 0);
}

TEST_CASE("content-swap toggle is a content-transposing involution") {
  for (const BoxDims& d : {BoxDims(2, 2, 2), BoxDims(3, 2, 2)}) {
    for (const PlanePartition& pp : enumerate_box(d)) {
      const ShiftedArray sa = shift_rows(pp);
      const ContentSeq mu = content(sa);
      for (int j = 0; j + 1 <= d.a + d.c - 1; ++j) {
        const ShiftedArray swapped = bender_knuth_swap(sa, j);
        CHECK(bender_knuth_swap(swapped, j) == sa);
        ContentSeq nu = content(swapped);
        std::swap(nu[static_cast<std::size_t>(j)], nu[static_cast<std::size_t>(j + 1)]);
        CHECK(nu == mu);
      }
    }
  }
}

TEST_CASE("toggle leaves arrays without j or j+1 alone") {
  const ShiftedArray sa = shift_rows(PlanePartition::zero(BoxDims(1, 2, 3)));  // values all 0
  CHECK(bender_knuth_swap(sa, 2) == sa);
}

TEST_CASE("horizontal positions of the unit hexagon") {
  const BoxDims d(1, 1, 1);
  CHECK(horizontal_positions(validate({{0}}, d)) == std::vector<ObliquePos>{{1, 0}});
  CHECK(horizontal_positions(validate({{1}}, d)) == std::vector<ObliquePos>{{1, 1}});
}

TEST_CASE("horizontal positions of the empty stack") {
  const BoxDims d(3, 4, 2);
  const std::vector<ObliquePos> pos = horizontal_positions(PlanePartition::zero(d));
  std::set<ObliquePos> want;
  for (int i = 1; i <= d.a; ++i)
    for (int j = 1; j <= d.b; ++j) want.insert(ObliquePos{j - i + d.a, d.a - i});
  CHECK(std::set<ObliquePos>(pos.begin(), pos.end()) == want);
}

TEST_CASE("tilings carry a*b distinct horizontals with fixed line counts") {
  const BoxDims d(2, 2, 2);
  for (const PlanePartition& pp : enumerate_box(d)) {
    const std::vector<ObliquePos> pos = horizontal_positions(pp);
    CHECK(pos.size() == 4);
    CHECK(std::set<ObliquePos>(pos.begin(), pos.end()).size() == 4);
    const LozengeTiling t = tiling_from_pp(pp);  // the constructor checks the line counts
    std::map<int, int> per_line;
    for (const ObliquePos& p : t.horizontals()) ++per_line[p.x];
    for (int x = 1; x <= 3; ++x) CHECK(per_line[x] == column_count(d, x));
  }
}

TEST_CASE("the tiling correspondence inverts") {
  for (const BoxDims& d : {BoxDims(2, 2, 2), BoxDims(2, 3, 2), BoxDims(3, 2, 2)}) {
    for (const PlanePartition& pp : enumerate_box(d))
      CHECK(plane_partition_from_tiling(tiling_from_pp(pp)) == pp);
  }
}

TEST_CASE("complementation reflects positions through the centre") {
  const BoxDims d(2, 3, 2);
  for (const PlanePartition& pp : enumerate_box(d)) {
    std::vector<ObliquePos> reflected;
    for (const ObliquePos& p : horizontal_positions(pp))
      reflected.push_back(ObliquePos{d.a + d.b - p.x, d.a + d.c - 1 - p.y});
    std::sort(reflected.begin(), reflected.end());
    CHECK(reflected == horizontal_positions(complement(pp)));
  }
}

TEST_CASE("involutions hold on sampled partitions of larger boxes") {
  for (const BoxDims& d : {BoxDims(4, 5, 3), BoxDims(5, 5, 4)}) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const PlanePartition pp = sample_uniform(d, 11, i);
      CHECK(complement(complement(pp)) == pp);
      CHECK(unshift_rows(shift_rows(pp)) == pp);
      CHECK(plane_partition_from_tiling(tiling_from_pp(pp)) == pp);
      if (d.a == d.b) CHECK(transpose_complement(transpose_complement(pp)) == pp);
    }
  }
}

TEST_CASE("malformed tilings are rejected") {
  const BoxDims d(1, 1, 1);
  CHECK_THROWS_AS(LozengeTiling(d, {}), Error);
  CHECK_THROWS_AS(LozengeTiling(d, {ObliquePos{0, 0}}), Error);
  CHECK_THROWS_AS(LozengeTiling(BoxDims(2, 2, 2),
                                std::vector<ObliquePos>{{1, 0}, {1, 1}, {2, 0}, {3, 1}}),
                  Error);
}
