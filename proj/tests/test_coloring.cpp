#include "doctest.h"

#include "inflation/coloring.hpp"
#include "inflation/error.hpp"

#include <map>
#include <set>

using namespace inflation;

TEST_CASE("sample_balanced") {
  const Coloring c = sample_balanced(GroundSet::plain(4), 2, 7);
  CHECK(c.is_balanced());
  CHECK(c.part_sizes() == std::vector<std::size_t>{2, 2});
  CHECK(c == sample_balanced(GroundSet::plain(4), 2, 7));
  CHECK_THROWS_AS(sample_balanced(GroundSet::plain(5), 2, 7), Error);
}

TEST_CASE("sampling is uniform over the six colorings of |X|=4, k=2") {
  Rng rng(20240601);
  std::map<std::vector<Color>, int> hits;
  constexpr int samples = 60'000;
  for (int s = 0; s < samples; ++s) ++hits[sample_balanced(GroundSet::plain(4), 2, rng).assignment()];
  REQUIRE(hits.size() == 6);
  const double expected = samples / 6.0;
  double chi2 = 0;
  for (const auto& [a, h] : hits) chi2 += (h - expected) * (h - expected) / expected;
  // 0.999 quantile of chi-square with 5 degrees of freedom
  CHECK(chi2 < 20.515);
}

TEST_CASE("enumerate_balanced") {
  CHECK(enumerate_balanced(GroundSet::plain(2), 2).size() == 2);
  CHECK(enumerate_balanced(GroundSet::plain(4), 2).size() == 6);
  const auto six = enumerate_balanced(GroundSet::plain(6), 3);
  CHECK(six.size() == 90);
  std::set<std::vector<Color>> distinct;
  for (const auto& c : six) {
    CHECK(c.is_balanced());
    distinct.insert(c.assignment());
  }
  CHECK(distinct.size() == 90);
  CHECK_THROWS_AS(enumerate_balanced(GroundSet::plain(12), 2, 100), Error);
}

TEST_CASE("enumeration count matches count_balanced") {
  for (std::size_t k : {2, 3, 4}) {
    for (std::size_t x = 0; x <= 12; x += k) {
      std::uint64_t seen = 0;
      bool balanced = true;
      for_each_balanced(x, k, 10'000'000, [&](std::uint64_t, const Coloring& c) {
        ++seen;
        balanced = balanced && c.is_balanced();
      });
      CHECK(BigInt(seen) == count_balanced(x, k));
      CHECK(balanced);
    }
  }
}

TEST_CASE("count_balanced") {
  CHECK(count_balanced(4, 2) == 6);
  CHECK(count_balanced(6, 3) == 90);
  CHECK(count_balanced(12, 2) == 924);
  CHECK_THROWS_AS(count_balanced(5, 2), Error);
}

TEST_CASE("unrank agrees with sequential enumeration") {
  std::uint64_t rank = 0;
  for_each_balanced(8, 4, 1'000'000, [&](std::uint64_t r, const Coloring& c) {
    CHECK(r == rank);
    CHECK(unrank_balanced(8, 4, r) == c.assignment());
    ++rank;
  });
}

TEST_CASE("parallel enumeration visits every rank once") {
  std::vector<int> visits(924, 0);
  for_each_balanced_parallel(12, 2, 10'000, 4, [&](std::uint64_t r, const Coloring&, unsigned) {
    ++visits[r];
  });
  CHECK(std::all_of(visits.begin(), visits.end(), [](int v) { return v == 1; }));
}

TEST_CASE("coloring text format") {
  const Coloring c = parse_coloring("0 1 1 0 # comment\n", 2);
  CHECK(c.assignment() == std::vector<Color>{0, 1, 1, 0});
  CHECK(serialize(c) == "0 1 1 0\n");
  CHECK(parse_coloring(serialize(c), 2) == c);
  CHECK_THROWS_AS(parse_coloring("0 2", 2), Error);
  CHECK_THROWS_AS(parse_coloring("0 1\n1 0\n", 2), Error);
}

namespace {

SetSystem singletons() {
  return SetSystem(GroundSet::plain(4), 1, {{0}, {1}, {2}, {3}});
}

}  // namespace

TEST_CASE("encode_bad_pair") {
  SUBCASE("constant tuple") {
    const SetSystem sys(GroundSet::plain(4), 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Coloring c(2, {0, 1, 0, 1});
    const TupleOfSets tuple{{4, 4}};  // ({1,3}, {1,3})
    const EncodedRecord rec = encode_bad_pair(c, tuple, 1, sys);
    CHECK(rec.intersections == std::vector<ElementSet>{{1, 3}});
    CHECK(rec.others == std::vector<std::size_t>{4});
    CHECK(rec.index == 1);
    // S_1 ⊆ X_1 already, so nothing is recolored
    CHECK(rec.recolored == c);
  }
  SUBCASE("rank among two candidates") {
    const SetSystem sys = singletons();
    const Coloring c(2, {0, 0, 1, 1});
    const EncodedRecord rec = encode_bad_pair(c, TupleOfSets{{0, 3}}, 1, sys);
    CHECK(encoding_candidates(rec, sys) == std::vector<std::size_t>{2, 3});
    CHECK(rec.index == 2);
  }
  SUBCASE("recoloring moves S_j into part j") {
    const SetSystem sys = singletons();
    const Coloring c(2, {0, 0, 1, 1});
    const EncodedRecord rec = encode_bad_pair(c, TupleOfSets{{2, 0}}, 1, sys);
    CHECK(rec.recolored.assignment() == std::vector<Color>{1, 0, 1, 1});
    CHECK_FALSE(rec.recolored.is_balanced());
  }
}

TEST_CASE("decode_partial inverts encode_bad_pair on exhaustive tiny instances") {
  // k = 2: every family of 2-subsets of [4] with at least two sets
  const SetSystem all = SetSystem(GroundSet::plain(4), 2,
                                  {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::uint64_t checked = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<ElementSet> sets;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask >> b & 1) sets.push_back(all[b]);
    }
    const SetSystem sys(GroundSet::plain(4), 2, sets);
    for (const Coloring& c : enumerate_balanced(sys.ground(), 2)) {
      for (std::size_t a = 0; a < sys.size(); ++a) {
        for (std::size_t b = 0; b < sys.size(); ++b) {
          const TupleOfSets tuple{{a, b}};
          for (std::size_t j = 0; j < 2; ++j) {
            const EncodedRecord rec = encode_bad_pair(c, tuple, j, sys);
            CHECK(rec.index >= 1);
            const DecodedPair dec = decode_partial(rec, sys);
            CHECK(dec.tuple == tuple);
            for (std::size_t e = 0; e < 4; ++e) {
              if (sys[tuple[j]].contains(static_cast<Element>(e))) {
                CHECK_FALSE(dec.colors[e].has_value());
              } else {
                CHECK(dec.colors[e] == c[e]);
              }
            }
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 0);

  // k = 3 over ground 6
  const SetSystem sys(GroundSet::plain(6), 2, {{0, 1}, {0, 2}, {1, 3}, {4, 5}});
  for (const Coloring& c : enumerate_balanced(sys.ground(), 3)) {
    for (std::uint64_t r = 0; r < 64; ++r) {
      const TupleOfSets tuple{{r / 16, r / 4 % 4, r % 4}};
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(decode_partial(encode_bad_pair(c, tuple, j, sys), sys).tuple == tuple);
      }
    }
  }
}

TEST_CASE("decode_partial rejects a corrupted index") {
  const SetSystem sys = singletons();
  const Coloring c(2, {0, 0, 1, 1});
  EncodedRecord rec = encode_bad_pair(c, TupleOfSets{{0, 3}}, 1, sys);
  rec.index = 3;
  CHECK_THROWS_AS(decode_partial(rec, sys), Error);
  rec.index = 0;
  CHECK_THROWS_AS(decode_partial(rec, sys), Error);
}
