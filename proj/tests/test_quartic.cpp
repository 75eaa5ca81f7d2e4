#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rulerwrap/oracle.hpp"
#include "rulerwrap/quartic.hpp"
#include "test_util.hpp"

using namespace rulerwrap;

namespace {

std::set<std::pair<Length, Length>> pair_set(const std::vector<PairEntry>& list) {
  std::set<std::pair<Length, Length>> out;
  for (const auto& e : list) out.emplace(e.k1, e.k2);
  return out;
}

}  // namespace

TEST_CASE("build_table: worked examples") {
  {
    const SegmentLengths s({1, 2});
    const WrapTable table = build_table(s);
    CHECK(pair_set(table.list(1)) == std::set<std::pair<Length, Length>>{{0, 1}});
    CHECK(pair_set(table.list(2)) == std::set<std::pair<Length, Length>>{{0, 3}, {1, 2}});
    CHECK(table.list(2).size() == 2);  // the extension rediscovers base (1, 2)
  }
  {
    const SegmentLengths s({2, 2, 2, 2});
    const WrapTable table = build_table(s);
    const auto& final_list = table.list(4);
    const auto it = std::find_if(final_list.begin(), final_list.end(), [](const PairEntry& e) {
      return e.k1 == 2 && e.k2 == 2;
    });
    REQUIRE(it != final_list.end());
    CHECK(!it->is_base());  // reached by an extension chain, not a base split
  }
  {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 20; ++iter) {
      std::uniform_int_distribution<int> n_dist(1, 9);
      const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 6));
      const WrapTable table = build_table(s);
      CHECK(pair_set(table.list(1)) ==
            std::set<std::pair<Length, Length>>{{0, s.prefix(1)}});
    }
  }
}

TEST_CASE("build_table honors its memory ceiling") {
  std::vector<Length> lengths(10, 1);
  CHECK_THROWS_AS(build_table(SegmentLengths(lengths), 9), std::invalid_argument);
  CHECK_NOTHROW(build_table(SegmentLengths(lengths), 10));
}

TEST_CASE("decide_quartic: worked examples") {
  {
    const SegmentLengths s({1, 1, 2, 2, 3, 3});
    const auto outcome = decide_quartic(build_table(s), s, RectangleBound{3, 3, false});
    CHECK(outcome.feasible);
    REQUIRE(outcome.witness.has_value());
    CHECK(validate_wrapping(s, outcome.witness->partition, RectangleBound{3, 3, false}).ok());
  }
  {
    const SegmentLengths s({3, 1, 1});
    const auto outcome = decide_quartic(build_table(s), s, RectangleBound{1, 3, false});
    CHECK(!outcome.feasible);
    CHECK(!outcome.witness.has_value());
  }
  {
    const SegmentLengths s({1, 2});
    const auto outcome = decide_quartic(build_table(s), s, RectangleBound{0, 3, false});
    CHECK(outcome.feasible);
    REQUIRE(outcome.witness.has_value());
    CHECK(outcome.witness->side_sums == std::vector<Length>{0, 3});
  }
  {
    const SegmentLengths s({5});
    const auto outcome = decide_quartic(build_table(s), s, RectangleBound{5, 4, true});
    CHECK(outcome.feasible);
    REQUIRE(outcome.witness.has_value());
    CHECK(outcome.witness->rotated);
  }
  {
    const SegmentLengths s({1, 2});
    const SegmentLengths other({1, 3});
    CHECK_THROWS_AS(decide_quartic(build_table(s), other, RectangleBound{1, 1, false}),
                    std::invalid_argument);
  }
}

TEST_CASE("frontier_quartic: worked examples") {
  using P = std::pair<Length, Length>;
  CHECK(frontier_quartic(build_table(SegmentLengths({1, 2}))) == std::vector<P>{{0, 3}, {1, 2}});
  CHECK(frontier_quartic(build_table(SegmentLengths({1}))) == std::vector<P>{{0, 1}});
}

TEST_CASE("every stored entry decodes its (a, b) identity by prefix inversion") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 10);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 8));
    const WrapTable table = build_table(s);
    const auto prefixes = s.prefixes();
    for (int i = 1; i <= table.size(); ++i) {
      std::set<std::pair<int, int>> identities;
      for (const PairEntry& e : table.list(i)) {
        // k2 pins b, then k1 pins a; strict prefix growth makes both unique.
        const auto b_it =
            std::lower_bound(prefixes.begin(), prefixes.end(), s.prefix(i) - e.k2);
        REQUIRE(b_it != prefixes.end());
        CHECK(*b_it == s.prefix(i) - e.k2);
        const int b = static_cast<int>(b_it - prefixes.begin());
        const auto a_it = std::lower_bound(prefixes.begin(), prefixes.end(), *b_it - e.k1);
        REQUIRE(a_it != prefixes.end());
        CHECK(*a_it == *b_it - e.k1);
        const int a = static_cast<int>(a_it - prefixes.begin());
        CHECK(a == e.a);
        CHECK(b == e.b);
        CHECK(identities.emplace(a, b).second);  // unique within the list
      }
      CHECK(table.list(i).size() <= static_cast<std::size_t>(i) * (i + 1) / 2);
    }
  }
}

TEST_CASE("verdict equality with the oracle, randomized campaign") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 800; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 12);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 8));
    const WrapTable table = build_table(s);
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    const bool rotate = iter % 3 == 0;
    const RectangleBound bound{h, w, rotate};
    const auto outcome = decide_quartic(table, s, bound);
    CHECK(outcome.feasible == brute_force_decide(s, bound).feasible);
    if (outcome.feasible) {
      REQUIRE(outcome.witness.has_value());
      const auto v = validate_wrapping(s, outcome.witness->partition, bound);
      CHECK(v.ok());
      CHECK((v.verdict == Validity::ValidRotated) == outcome.witness->rotated);
    }
  }
}

TEST_CASE("frontier equality with the oracle") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 12);
    const SegmentLengths s(testutil::random_lengths(rng, n_dist(rng), 8));
    CHECK(frontier_quartic(build_table(s)) ==
          brute_force_decide(s, RectangleBound{0, 0, false}).frontier);
  }
}

TEST_CASE("one table serves many bounds identically to fresh runs") {
  std::mt19937_64 rng(67);
  const SegmentLengths s(testutil::random_lengths(rng, 10, 8));
  const WrapTable shared = build_table(s);
  for (int iter = 0; iter < 50; ++iter) {
    const auto [h, w] = testutil::sample_bound(rng, s.total());
    const RectangleBound bound{h, w, false};
    const WrapTable fresh = build_table(s);
    CHECK(decide_quartic(shared, s, bound).feasible == decide_quartic(fresh, s, bound).feasible);
  }
}
