#include <catch2/catch_amalgamated.hpp>

#include "mti/generate.hpp"
#include "mti/interval.hpp"
#include "mti/reduction.hpp"

using namespace mti;

TEST_CASE("open interval intersection") {
  CHECK(interval_intersects({1, 3}, {2, 4}));
  CHECK_FALSE(interval_intersects({-1, 1}, {1, 5}));  // touching endpoints stay disjoint
  CHECK(interval_intersects({1, 2}, {1, 2}));
  CHECK(interval_intersects({-3, 5}, {0, 1}));  // containment
  CHECK_FALSE(interval_intersects({-4, -2}, {2, 4}));
}

TEST_CASE("interval intersection is symmetric and reflexive") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int alo = static_cast<int>(rng.below(20)) - 10;
    const OpenInterval a{alo, alo + 1 + static_cast<int>(rng.below(8))};
    const int blo = static_cast<int>(rng.below(20)) - 10;
    const OpenInterval b{blo, blo + 1 + static_cast<int>(rng.below(8))};
    CHECK(interval_intersects(a, a));
    CHECK(interval_intersects(a, b) == interval_intersects(b, a));
  }
}

TEST_CASE("multi-track intersection is same-track only") {
  // track 1 of u overlaps track 2 of v, but no shared track overlaps
  const MultiTrackInterval u{{{0, 2}, {10, 12}, {20, 22}}};
  const MultiTrackInterval v{{{5, 7}, {0, 2}, {30, 32}}};
  CHECK_FALSE(mti_intersects(u, v));
  const MultiTrackInterval w{{{5, 7}, {11, 13}, {30, 32}}};
  CHECK(mti_intersects(u, w));
}

TEST_CASE("multi-track intersection rejects mismatched track counts") {
  const MultiTrackInterval two{{{0, 1}, {0, 1}}};
  const MultiTrackInterval three{{{0, 1}, {0, 1}, {0, 1}}};
  CHECK_THROWS_AS(mti_intersects(two, three), std::invalid_argument);
}

TEST_CASE("literal geometry at n=4") {
  const int n = 4;
  CHECK_FALSE(mti_intersects(literal_tracks(1, false, n), literal_tracks(1, true, n)));
  CHECK(mti_intersects(literal_tracks(1, false, n), literal_tracks(2, false, n)));
  // the clause interval of x1 & x3 meets the negative literal of x1 on track 2
  const Clause c1{pos(1), pos(3)};
  CHECK(mti_intersects(clause_tracks(c1, n), literal_tracks(1, true, n)));
  CHECK_FALSE(mti_intersects(clause_tracks(c1, n), literal_tracks(1, false, n)));
}

TEST_CASE("mti_intersects is symmetric on constructed members") {
  const int n = 5;
  std::vector<MultiTrackInterval> ms;
  for (int i = 1; i <= n; ++i) {
    ms.push_back(literal_tracks(i, false, n));
    ms.push_back(literal_tracks(i, true, n));
  }
  ms.push_back(clause_tracks(Clause{pos(1), neg(4)}, n));
  ms.push_back(clause_tracks(Clause{neg(2), neg(2)}, n));
  for (const auto& a : ms)
    for (const auto& b : ms) CHECK(mti_intersects(a, b) == mti_intersects(b, a));
}
