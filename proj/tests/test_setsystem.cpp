#include "doctest.h"

#include "inflation/error.hpp"
#include "inflation/rational.hpp"
#include "inflation/rng.hpp"
#include "inflation/setsystem.hpp"

#include <set>

using namespace inflation;

namespace {

SetSystem make(std::size_t ground, std::size_t width, std::vector<ElementSet> sets) {
  return SetSystem(GroundSet::plain(ground), width, std::move(sets));
}

// Random family of sets of size 1..w over [m] (mixed widths).
SetSystem random_mixed(Rng& rng, std::size_t m, std::size_t w, std::size_t count) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> sets;
  for (std::size_t attempt = 0; sets.size() < count && attempt < 50 * count; ++attempt) {
    const std::size_t size = 1 + uniform_below(rng, std::min(w, m));
    std::set<Element> members;
    while (members.size() < size) members.insert(static_cast<Element>(uniform_below(rng, m)));
    ElementSet s(std::vector<Element>(members.begin(), members.end()));
    if (seen.insert(s).second) sets.push_back(s);
  }
  return make(m, w, std::move(sets));
}

}  // namespace

TEST_CASE("intersect") {
  CHECK(intersect({0, 2}, {1, 2}) == ElementSet{2});
  const ElementSet a{1, 4, 7};
  CHECK(intersect(a, a) == a);
  CHECK(intersect({0}, {1}).empty());
}

TEST_CASE("element sets reject repeats") {
  CHECK_THROWS_AS(ElementSet(std::vector<Element>{3, 1, 3}), Error);
  CHECK(ElementSet(std::vector<Element>{3, 1}).members() == std::vector<Element>{1, 3});
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(make(3, 1, {{0, 1}}), Error);        // over width
  CHECK_THROWS_AS(make(2, 2, {{0, 2}}), Error);        // outside ground
  CHECK_THROWS_AS(make(3, 2, {{0, 1}, {1, 0}}), Error);  // duplicate
}

TEST_CASE("pad_to_width") {
  SUBCASE("single undersized set") {
    const auto padded = pad_to_width(make(1, 2, {{0}}));
    REQUIRE(padded.system.size() == 1);
    CHECK(padded.system[0] == ElementSet{0, 1});
    CHECK(padded.system.ground().size == 2);
    CHECK(padded.system.ground().is_dummy(1));
    CHECK(padded.strip(padded.system[0]) == ElementSet{0});
  }
  SUBCASE("already full width is unchanged") {
    const SetSystem sys = make(4, 2, {{0, 1}, {2, 3}});
    CHECK(pad_to_width(sys).system == sys);
  }
  SUBCASE("dummies are fresh per set") {
    const auto padded = pad_to_width(make(2, 2, {{0}, {1}}));
    CHECK(padded.system[0] == ElementSet{0, 2});
    CHECK(padded.system[1] == ElementSet{1, 3});
    CHECK(intersect(padded.system[0], padded.system[1]).empty());
  }
}

TEST_CASE("padding preserves intersections of distinct sets") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem sys = random_mixed(rng, 2 + uniform_below(rng, 8), 1 + uniform_below(rng, 4),
                                       1 + uniform_below(rng, 15));
    const auto padded = pad_to_width(sys);
    REQUIRE(padded.system.is_full_width());
    REQUIRE(padded.system.size() == sys.size());
    for (std::size_t a = 0; a < sys.size(); ++a) {
      CHECK(padded.strip(padded.system[a]) == sys[a]);
      for (std::size_t b = a + 1; b < sys.size(); ++b) {
        CHECK(intersect(padded.system[a], padded.system[b]) == intersect(sys[a], sys[b]));
      }
    }
  }
}

TEST_CASE("pad_ground_to_multiple") {
  CHECK(pad_ground_to_multiple(make(3, 1, {{0}}), 2).ground().size == 4);
  const SetSystem four = make(4, 1, {{0}, {3}});
  CHECK(pad_ground_to_multiple(four, 2) == four);
  const SetSystem five = make(5, 2, {{0, 4}, {1, 2}});
  const SetSystem six = pad_ground_to_multiple(five, 3);
  CHECK(six.ground().size == 6);
  CHECK(six.ground().original_size == 5);
  CHECK(six.sets() == five.sets());
  CHECK_THROWS_AS(pad_ground_to_multiple(five, 1), Error);
}

TEST_CASE("link") {
  const SetSystem f = make(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  const SetSystem l = link(f, {0});
  REQUIRE(l.size() == 2);
  CHECK(l[0] == ElementSet{1});
  CHECK(l[1] == ElementSet{2});
  CHECK(link(f, {}) == f);
  CHECK(link(f, {0, 1, 2}).empty());
  CHECK(l.ground() == f.ground());
}

TEST_CASE("link deduplicates and never grows") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem sys = random_mixed(rng, 6, 3, 12);
    const ElementSet u{static_cast<Element>(uniform_below(rng, 6))};
    const SetSystem l = link(sys, u);
    CHECK(l.size() <= sys.size());
    std::set<ElementSet> distinct(l.sets().begin(), l.sets().end());
    CHECK(distinct.size() == l.size());
  }
}

TEST_CASE("generate_complete_family") {
  CHECK(generate_complete_family(4, 2).size() == 6);
  const SetSystem f52 = generate_complete_family(5, 2);
  CHECK(f52.size() == 10);
  CHECK(f52[0] == ElementSet{0, 1});
  CHECK(f52[9] == ElementSet{3, 4});
  CHECK(generate_complete_family(3, 3).size() == 1);
  CHECK_THROWS_AS(generate_complete_family(2, 3), Error);
  for (std::size_t m = 0; m <= 9; ++m) {
    for (std::size_t w = 0; w <= m; ++w) {
      const SetSystem f = generate_complete_family(m, w);
      CHECK(BigInt(f.size()) == binomial(m, w));
      CHECK(std::is_sorted(f.sets().begin(), f.sets().end()));
    }
  }
}

TEST_CASE("generate_uniform_family") {
  const SetSystem all = generate_uniform_family(4, 2, 6, 3);
  CHECK(all == generate_complete_family(4, 2));

  const SetSystem a = generate_uniform_family(5, 2, 3, 42);
  const SetSystem b = generate_uniform_family(5, 2, 3, 42);
  CHECK(a.size() == 3);
  CHECK(a == b);
  CHECK(a.is_full_width());

  const SetSystem sparse = generate_uniform_family(40, 3, 25, 9);
  CHECK(sparse.size() == 25);
  CHECK(sparse == generate_uniform_family(40, 3, 25, 9));

  CHECK_THROWS_AS(generate_uniform_family(2, 2, 2, 1), Error);
}

TEST_CASE("text format") {
  const auto parsed = parse_set_system("# a family\n!ground 5\n0 1\n\n2 4  # trailing\n3\n");
  const SetSystem& sys = parsed.system;
  CHECK(sys.ground().size == 5);
  CHECK(sys.width() == 2);
  REQUIRE(sys.size() == 3);
  CHECK(sys[1] == ElementSet{2, 4});
  CHECK_FALSE(parsed.remapped);

  SUBCASE("round trip") {
    const std::string text = serialize(sys);
    CHECK(parse_set_system(text).system == sys);
    CHECK(serialize(parse_set_system(text).system) == text);
  }
  SUBCASE("duplicate lines") {
    CHECK_THROWS_AS(parse_set_system("0 1\n1 0\n"), Error);
  }
  SUBCASE("dense remap without a directive") {
    const auto p = parse_set_system("10 30\n20\n");
    CHECK(p.remapped);
    CHECK(p.system.ground().size == 3);
    CHECK(p.system[0] == ElementSet{0, 2});
    CHECK(p.original_ids == std::vector<std::uint64_t>{10, 20, 30});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_set_system("!ground 2\n0 2\n"), Error);
    CHECK_THROWS_AS(parse_set_system("0 x\n"), Error);
    CHECK_THROWS_AS(parse_set_system("1 1\n"), Error);
    CHECK_THROWS_AS(parse_set_system("0\n!ground 3\n"), Error);
    CHECK_THROWS_AS(parse_set_system("0 1 2\n", 2), Error);
  }
  SUBCASE("empty set token") {
    const auto p = parse_set_system("!ground 2\n{}\n0\n");
    CHECK(p.system.empty_set_count() == 1);
    CHECK(serialize(p.system) == "!ground 2\n{}\n0\n");
  }
}

TEST_CASE("round trip on random families") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const SetSystem sys = random_mixed(rng, 9, 4, 20);
    CHECK(parse_set_system(serialize(sys), sys.width()).system == sys);
  }
}
