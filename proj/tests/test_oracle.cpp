#include "doctest.h"

#include <algorithm>

#include "inflation/error.hpp"
#include "inflation/oracle.hpp"
#include "test_support.hpp"

using namespace inflation;
using inflation::testing::random_mixed_family;
using inflation::testing::random_tuple;

namespace {

const SetSystem& singletons() {
  static const SetSystem sys(GroundSet::plain(4), 1, {{0}, {1}, {2}, {3}});
  return sys;
}

// Literal definition, brute force over all pairs of subfamilies of F that
// contain S_1 and S_2. Only for k = 2 and |F| <= 10.
std::size_t brute_force_max_threshold(const SetSystem& sys, const TupleOfSets& pair) {
  const std::size_t f = sys.size();
  const ElementSet target = intersect(sys[pair[0]], sys[pair[1]]);
  std::size_t best = 0;
  for (std::uint32_t a = 0; a < (1u << f); ++a) {
    if (!(a >> pair[0] & 1)) continue;
    for (std::uint32_t b = 0; b < (1u << f); ++b) {
      if (!(b >> pair[1] & 1)) continue;
      const std::size_t size = std::min(__builtin_popcount(a), __builtin_popcount(b));
      if (size <= best) continue;
      bool ok = true;
      for (std::size_t x = 0; ok && x < f; ++x) {
        if (!(a >> x & 1)) continue;
        for (std::size_t y = 0; ok && y < f; ++y) {
          if ((b >> y & 1) && intersect(sys[x], sys[y]) != target) ok = false;
        }
      }
      if (ok) best = size;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("candidate_sets") {
  const CandidateSets c = candidate_sets(singletons(), TupleOfSets{{0, 2}});
  CHECK(c.parts[0] == std::vector<std::size_t>{0, 1, 3});
  CHECK(c.parts[1] == std::vector<std::size_t>{1, 2, 3});

  const SetSystem full = generate_complete_family(5, 2);
  const CandidateSets constant = candidate_sets(full, TupleOfSets{{4, 4, 4}});
  for (const auto& part : constant.parts) CHECK(part == std::vector<std::size_t>{4});

  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem sys = random_mixed_family(rng, 7, 3, 12);
    const TupleOfSets tuple = random_tuple(rng, sys.size(), 2 + uniform_below(rng, 2));
    const CandidateSets cs = candidate_sets(sys, tuple);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      CHECK(std::find(cs.parts[i].begin(), cs.parts[i].end(), tuple[i]) != cs.parts[i].end());
    }
  }
}

TEST_CASE("compatible") {
  const TupleOfSets tuple{{0, 2}};
  CHECK(compatible(singletons(), 0, 0, 2, 1, tuple));
  CHECK(compatible(singletons(), 1, 0, 3, 1, tuple));
  CHECK_FALSE(compatible(singletons(), 1, 0, 1, 1, tuple));
  CHECK_FALSE(compatible_reduced(singletons(), 1, 0, 1, 1, tuple));
  CHECK_THROWS_AS(compatible(singletons(), 0, 0, 1, 0, tuple), Error);
}

TEST_CASE("compatible_reduced agrees with compatible on candidate pairs") {
  Rng rng(10'000);
  int draws = 0;
  while (draws < 10'000) {
    const SetSystem sys = random_mixed_family(rng, 3 + uniform_below(rng, 8), 1 + uniform_below(rng, 4),
                                              2 + uniform_below(rng, 20));
    const std::size_t k = 2 + uniform_below(rng, 2);
    const TupleOfSets tuple = random_tuple(rng, sys.size(), k);
    const CandidateSets cs = candidate_sets(sys, tuple);
    for (int d = 0; d < 10; ++d, ++draws) {
      const std::size_t i = uniform_below(rng, k);
      std::size_t j = uniform_below(rng, k - 1);
      if (j >= i) ++j;
      const std::size_t ti = cs.parts[i][uniform_below(rng, cs.parts[i].size())];
      const std::size_t tj = cs.parts[j][uniform_below(rng, cs.parts[j].size())];
      REQUIRE(compatible(sys, ti, i, tj, j, tuple) == compatible_reduced(sys, ti, i, tj, j, tuple));
      CHECK(compatible_reduced(sys, tuple[i], i, tj, j, tuple));
    }
  }
}

TEST_CASE("inflatable_exact") {
  const Verdict v = inflatable_exact(singletons(), TupleOfSets{{0, 2}}, 2);
  REQUIRE(v.inflatable());
  CHECK(v.witness->families == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});

  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem sys = random_mixed_family(rng, 8, 3, 15);
    const std::size_t k = 2 + uniform_below(rng, 2);
    const TupleOfSets tuple = random_tuple(rng, sys.size(), k);
    const Verdict all = inflatable_exact(sys, tuple, sys.size());
    REQUIRE(all.inflatable());
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(all.witness->families[i] == std::vector<std::size_t>{tuple[i]});
    }
  }
}

TEST_CASE("budget exhaustion is inconclusive, not negative") {
  const SetSystem sys = generate_complete_family(8, 2);
  const Verdict v = search_inflation(sys, TupleOfSets{{0, 27}}, 5, 3);
  CHECK(v.status == Verdict::Status::budget_exceeded);
  CHECK_FALSE(v.witness.has_value());
  CHECK_THROWS_AS(max_inflation_threshold(sys, TupleOfSets{{0, 27}}, 3), Error);
}

TEST_CASE("max_inflation_threshold") {
  const SetSystem full = generate_complete_family(5, 2);
  CHECK(max_inflation_threshold(full, TupleOfSets{{3, 3}}) == 1);
  CHECK(max_inflation_threshold(singletons(), TupleOfSets{{0, 2}}) == 2);
}

TEST_CASE("oracle matches the literal definition by brute force (k = 2)") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const SetSystem sys = random_mixed_family(rng, 3 + uniform_below(rng, 4), 1 + uniform_below(rng, 3),
                                              2 + uniform_below(rng, 7));
    const TupleOfSets pair = random_tuple(rng, sys.size(), 2);
    const std::size_t expected = brute_force_max_threshold(sys, pair);
    CHECK(max_inflation_threshold(sys, pair) == expected);
    for (std::size_t t = 1; t <= sys.size(); ++t) {
      CHECK(search_inflation(sys, pair, t).inflatable() == (t <= expected));
    }
  }
}

TEST_CASE("verified witnesses lie inside the candidate sets") {
  Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + uniform_below(rng, 2);
    const SetSystem sys = normalize(random_mixed_family(rng, 8, 3, 14), k);
    const Coloring c = sample_balanced(sys.ground(), k, rng);
    const TupleOfSets tuple = random_tuple(rng, sys.size(), k);
    const ExactRational n(sys.size(), 2);
    if (!classify(sys, tuple, c, n).good) continue;
    const InflationWitness wit = extract_witness(sys, tuple, c, n);
    REQUIRE(verify_witness(sys, wit, tuple, n));
    const CandidateSets cs = candidate_sets(sys, tuple);
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(std::includes(cs.parts[i].begin(), cs.parts[i].end(), wit.families[i].begin(),
                          wit.families[i].end()));
    }
    CHECK(inflatable_exact(sys, tuple, n).inflatable());
  }
}

TEST_CASE("verdicts are stable across runs") {
  const SetSystem sys = generate_uniform_family(7, 2, 14, 12);
  for (std::size_t a = 0; a < sys.size(); ++a) {
    const TupleOfSets pair{{a, (a * 5 + 3) % sys.size()}};
    const Verdict first = inflatable_exact(sys, pair, ExactRational(7, 2));
    const Verdict second = inflatable_exact(sys, pair, ExactRational(7, 2));
    CHECK(first.status == second.status);
    CHECK(first.witness == second.witness);
    CHECK(first.nodes_explored == second.nodes_explored);
  }
}

TEST_CASE("padding an undersized shared set removes inflatability") {
  // {0} sits in both families; padded, {0,d} no longer meets itself in {0}
  const SetSystem sys(GroundSet::plain(3), 2, {{0}, {0, 1}, {0, 2}});
  const TupleOfSets pair{{1, 2}};
  const Verdict before = inflatable_exact(sys, pair, ExactRational(3, 2));
  REQUIRE(before.inflatable());
  for (const auto& family : before.witness->families) {
    CHECK(std::count(family.begin(), family.end(), std::size_t{0}) == 1);
  }
  CHECK_FALSE(inflatable_exact(normalize(sys, 2), pair, ExactRational(3, 2)).inflatable());
  // full-width families keep their verdicts
  const SetSystem full(GroundSet::plain(4), 2, {{0, 3}, {0, 1}, {0, 2}});
  CHECK(inflatable_exact(full, pair, ExactRational(3, 2)).status ==
        inflatable_exact(normalize(full, 2), pair, ExactRational(3, 2)).status);
}
