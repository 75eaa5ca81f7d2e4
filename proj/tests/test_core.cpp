#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rulerwrap/core.hpp"
#include "rulerwrap/oracle.hpp"
#include "test_util.hpp"

using namespace rulerwrap;

TEST_CASE("segment lengths: prefix sums and construction guards") {
  const SegmentLengths s({1, 1, 2, 2, 3, 3});
  CHECK(s.size() == 6);
  CHECK(s.prefix(0) == 0);
  CHECK(s.prefix(3) == 4);
  CHECK(s.total() == 12);
  CHECK(s.range_sum(1, 3) == 3);

  CHECK_THROWS_AS(SegmentLengths({}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentLengths({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentLengths({-3}), std::invalid_argument);
  CHECK_THROWS_AS(SegmentLengths({kMaxTotalLength, 1}), std::invalid_argument);
  CHECK_NOTHROW(SegmentLengths({kMaxTotalLength - 1, 1}));
}

TEST_CASE("partition: structural invariants") {
  CHECK_NOTHROW(Partition({0, 0, 2}, 2));        // empty S_1
  CHECK_NOTHROW(Partition({0, 1, 2, 3, 4}, 4));  // t = 4
  CHECK_THROWS_AS(Partition({0, 1, 3}, 4), std::invalid_argument);     // wrong end
  CHECK_THROWS_AS(Partition({1, 2, 3}, 3), std::invalid_argument);     // wrong start
  CHECK_THROWS_AS(Partition({0, 1, 2, 3}, 3), std::invalid_argument);  // odd t
  CHECK_THROWS_AS(Partition({0, 1, 1, 3}, 3), std::invalid_argument);  // empty interior side
  CHECK_THROWS_AS(Partition({0, 2, 1, 3}, 3), std::invalid_argument);  // non-monotone
  CHECK_THROWS_AS(Partition({0, 3}, 3), std::invalid_argument);        // t < 2

  CHECK(Partition::normalized({0, 1, 3}, 3).breakpoints() == std::vector<int>{0, 1, 3});
  CHECK(Partition::normalized({0, 1, 2, 3}, 3).breakpoints() == std::vector<int>{0, 0, 1, 2, 3});
  CHECK(Partition::normalized({0, 0, 1, 3}, 3).breakpoints() == std::vector<int>{0, 1, 3});
  CHECK(Partition::normalized({0, 0, 1, 2, 3}, 3).breakpoints() ==
        std::vector<int>{0, 0, 1, 2, 3});
}

TEST_CASE("side_sums: worked examples") {
  CHECK(side_sums(SegmentLengths({1, 1, 2, 2, 3, 3}), Partition({0, 1, 2, 3, 4, 5, 6}, 6)) ==
        std::vector<Length>{1, 1, 2, 2, 3, 3});
  CHECK(side_sums(SegmentLengths({1, 2}), Partition({0, 0, 2}, 2)) == std::vector<Length>{0, 3});
  CHECK(side_sums(SegmentLengths({3, 1, 1}), Partition({0, 1, 3}, 3)) ==
        std::vector<Length>{3, 2});
  CHECK_THROWS_AS(side_sums(SegmentLengths({1, 2}), Partition({0, 1, 3}, 3)),
                  std::invalid_argument);
}

TEST_CASE("validate_wrapping: worked examples") {
  {
    const SegmentLengths s({1, 1, 2, 2, 3, 3});
    const auto v = validate_wrapping(s, Partition({0, 1, 2, 3, 4, 5, 6}, 6),
                                     RectangleBound{3, 3, false});
    CHECK(v.verdict == Validity::ValidAsGiven);
  }
  {
    const SegmentLengths s({2, 2, 2, 2});
    const auto v =
        validate_wrapping(s, Partition({0, 1, 2, 3, 4}, 4), RectangleBound{2, 2, false});
    CHECK(v.verdict == Validity::ValidAsGiven);  // all constraints hold with equality
  }
  {
    const SegmentLengths s({5});
    CHECK(validate_wrapping(s, Partition({0, 0, 1}, 1), RectangleBound{5, 4, true}).verdict ==
          Validity::ValidRotated);
    const auto v = validate_wrapping(s, Partition({0, 0, 1}, 1), RectangleBound{5, 4, false});
    CHECK(v.verdict == Validity::Invalid);
    CHECK(!v.violation.empty());
  }
}

TEST_CASE("quick_infeasible: worked examples") {
  CHECK(quick_infeasible(SegmentLengths({9, 1}), RectangleBound{3, 4, false}));
  CHECK(quick_infeasible(SegmentLengths({1}), RectangleBound{0, 0, false}));
  CHECK(quick_infeasible(SegmentLengths({1}), RectangleBound{0, 0, true}));
  CHECK(quick_infeasible(SegmentLengths({1, 2}), RectangleBound{5, 0, false}));
  CHECK(!quick_infeasible(SegmentLengths({1, 2}), RectangleBound{5, 0, true}));
  CHECK(!quick_infeasible(SegmentLengths({3, 1, 1}), RectangleBound{1, 3, false}));
}

TEST_CASE("quick_infeasible never contradicts the oracle") {
  std::mt19937_64 rng(20260823);
  for (int iter = 0; iter < 400; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 9);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 6));
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    const RectangleBound bound{h, w, iter % 2 == 0};
    if (quick_infeasible(s, bound)) {
      CHECK(!brute_force_decide(s, bound).feasible);
    }
  }
}

TEST_CASE("parity chains hold on every accepted witness") {
  std::mt19937_64 rng(7);
  int accepted = 0;
  for (int iter = 0; iter < 500; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 10);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 8));
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    enumerate_partitions(s, [&](const Partition& p) {
      const auto v = validate_wrapping(s, p, RectangleBound{h, w, false});
      if (!v.ok()) return;
      ++accepted;
      const auto sums = side_sums(s, p);
      for (std::size_t j = 2; j < sums.size(); ++j) {
        CHECK(sums[j - 2] <= sums[j]);
      }
    });
  }
  CHECK(accepted > 0);
}

TEST_CASE("normalization: prepending an empty S_1 preserves the verdict") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 7);
    const int n = n_dist(rng);
    const SegmentLengths s(testutil::random_lengths(rng, n, 5));
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    // All compositions, including odd part counts.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<int> bps = {0};
      for (int g = 0; g < n - 1; ++g) {
        if (mask & (std::uint64_t{1} << g)) bps.push_back(g + 1);
      }
      bps.push_back(n);
      std::vector<Length> sums;
      for (std::size_t j = 1; j < bps.size(); ++j) {
        sums.push_back(s.range_sum(bps[j - 1], bps[j]));
      }
      const bool raw_ok = testutil::raw_sides_valid(sums, h, w);
      const Partition norm = Partition::normalized(bps, n);
      const bool norm_ok =
          validate_wrapping(s, norm, RectangleBound{h, w, false}).verdict ==
          Validity::ValidAsGiven;
      CHECK(raw_ok == norm_ok);
    }
  }
}

TEST_CASE("scale invariance of the verdict for fixed breakpoints") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    const int n = n_dist(rng);
    const auto lengths = testutil::random_lengths(rng, n, 6);
    const SegmentLengths s(lengths);
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    std::uniform_int_distribution<Length> c_dist(1, 9);
    const Length c = c_dist(rng);
    std::vector<Length> scaled = lengths;
    for (auto& len : scaled) len *= c;
    const SegmentLengths sc(scaled);
    enumerate_partitions(s, [&](const Partition& p) {
      const auto v1 = validate_wrapping(s, p, RectangleBound{h, w, false}).verdict;
      const auto v2 = validate_wrapping(sc, p, RectangleBound{h * c, w * c, false}).verdict;
      CHECK(v1 == v2);
    });
  }
}

TEST_CASE("bound monotonicity: accepted stays accepted under larger bounds") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 6));
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    std::uniform_int_distribution<Length> grow(0, 5);
    const Length h2 = h + grow(rng), w2 = w + grow(rng);
    enumerate_partitions(s, [&](const Partition& p) {
      if (validate_wrapping(s, p, RectangleBound{h, w, false}).ok()) {
        CHECK(validate_wrapping(s, p, RectangleBound{h2, w2, false}).ok());
      }
    });
  }
}

TEST_CASE("pareto_minimal keeps exactly the undominated pairs") {
  using P = std::pair<Length, Length>;
  CHECK(pareto_minimal({{0, 3}, {1, 2}}) == std::vector<P>{{0, 3}, {1, 2}});
  CHECK(pareto_minimal({{0, 3}, {1, 3}, {1, 2}, {2, 2}}) == std::vector<P>{{0, 3}, {1, 2}});
  CHECK(pareto_minimal({{5, 5}, {5, 5}}) == std::vector<P>{{5, 5}});
  CHECK(pareto_minimal({}).empty());

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Length> coord(0, 12);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<P> pairs;
    for (int k = 0; k < 30; ++k) pairs.emplace_back(coord(rng), coord(rng));
    const auto front = pareto_minimal(pairs);
    for (const auto& f : front) {
      for (const auto& p : pairs) {
        if (p != f) {
          CHECK(!(p.first <= f.first && p.second <= f.second));
        }
      }
    }
    for (const auto& p : pairs) {
      bool dominated = false;
      for (const auto& f : front) {
        if (f.first <= p.first && f.second <= p.second) dominated = true;
      }
      CHECK(dominated);
    }
  }
}
