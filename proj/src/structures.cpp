#include "inflation/structures.hpp"

#include "inflation/error.hpp"
#include "inflation/parallel.hpp"
#include "inflation/rng.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace inflation {

bool DisjointnessGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
}

DisjointnessGraph disjointness_graph(const SetSystem& family) {
  if (family.empty_set_count() > 0) {
    fail(ErrorCode::infeasible, "disjointness graphs exclude the empty set");
  }
  DisjointnessGraph g{family, {}};
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (bits::disjoint(family.mask(a), family.mask(b))) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

DisjointnessGraph kneser(std::size_t m, std::size_t w) {
  if (w == 0) fail(ErrorCode::infeasible, "Kneser graphs need w >= 1");
  return disjointness_graph(generate_complete_family(m, w));
}

InducedGraph induced(const DisjointnessGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<ElementSet> sets;
  for (std::size_t v : vertices) {
    if (v >= g.vertex_count()) fail(ErrorCode::precondition, "vertex index out of range");
    sets.push_back(g.family[v]);
  }
  SetSystem sub(g.family.ground(), g.family.width(), std::move(sets));
  InducedGraph out{{std::move(sub), {}}, vertices};
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g.has_edge(vertices[a], vertices[b])) out.graph.edges.emplace_back(a, b);
    }
  }
  return out;
}

bool verify_biclique(const DisjointnessGraph& g, const std::vector<std::size_t>& part_a,
                     const std::vector<std::size_t>& part_b) {
  std::vector<std::size_t> all = part_a;
  all.insert(all.end(), part_b.begin(), part_b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  if (!all.empty() && all.back() >= g.vertex_count()) return false;
  for (std::size_t a : part_a) {
    for (std::size_t b : part_b) {
      if (!g.has_edge(a, b)) return false;
    }
  }
  return true;
}

std::optional<BicliqueWitness> edge_biclique_witness(const DisjointnessGraph& g, const Edge& e,
                                                     const ExactRational& n,
                                                     const SearchMode& strategy,
                                                     const Budgets& budgets) {
  if (!g.has_edge(e.first, e.second)) fail(ErrorCode::precondition, "not an edge of the graph");
  const SetSystem family = normalize(g.family, 2);
  const TupleOfSets pair{{e.first, e.second}};

  std::optional<BicliqueWitness> found;
  auto attempt = [&](const Coloring& c) {
    const Classification cls = classify(family, pair, c, n);
    if (!cls.good) return false;
    InflationWitness wit = extract_witness(family, pair, c, n);
    BicliqueWitness out{wit.families[0], wit.families[1], c};
    if (!verify_biclique(g, out.part_a, out.part_b)) {
      fail(ErrorCode::internal, "mimic families of a disjoint pair are not a biclique");
    }
    found = std::move(out);
    return true;
  };

  if (strategy.kind == SearchMode::Kind::exhaustive) {
    const std::uint64_t total =
        checked_balanced_count(family.ground().size, 2, budgets.colorings);
    std::vector<Color> a = unrank_balanced(family.ground().size, 2, 0);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (attempt(Coloring(2, a))) break;
      std::next_permutation(a.begin(), a.end());
    }
  } else {
    Rng rng(strategy.seed);
    for (std::uint64_t t = 0; t < strategy.trials; ++t) {
      if (attempt(sample_balanced(family.ground(), 2, rng))) break;
    }
  }
  return found;
}

std::optional<SunflowerRecord> is_sunflower(const SetSystem& sys, const TupleOfSets& tuple) {
  check_tuple(sys, tuple);
  if (tuple.size() == 0) return std::nullopt;
  ElementSet kernel = sys[tuple[0]];
  for (std::size_t i = 1; i < tuple.size(); ++i) kernel = intersect(kernel, sys[tuple[i]]);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (intersect(sys[tuple[i]], sys[tuple[j]]) != kernel) return std::nullopt;
    }
  }
  SunflowerRecord rec{tuple, kernel, {}};
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    rec.petals.push_back(difference(sys[tuple[i]], kernel));
  }
  return rec;
}

namespace {

// Pairwise-equal intersections on the bit masks; the common value is then
// the k-wise intersection.
bool sunflower_masks(const SetSystem& sys, const TupleOfSets& tuple) {
  const bits::Row a = sys.mask(tuple[0]);
  const bits::Row b = sys.mask(tuple[1]);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (!bits::meet_equal(sys.mask(tuple[i]), sys.mask(tuple[j]), a, b)) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t for_each_sunflower(const SetSystem& sys, std::size_t k, bool distinct_only,
                                 const std::function<void(const SunflowerRecord&)>& fn,
                                 const Budgets& budgets) {
  if (k < 2) fail(ErrorCode::precondition, "sunflowers need k >= 2");
  if (sys.empty()) return 0;
  const std::uint64_t total = checked_tuple_count(sys.size(), k, budgets.tuples);
  std::uint64_t count = 0;
  std::vector<bool> used(sys.size());
  for (std::uint64_t r = 0; r < total; ++r) {
    const TupleOfSets tuple = tuple_at(r, sys.size(), k);
    if (distinct_only) {
      std::fill(used.begin(), used.end(), false);
      bool repeat = false;
      for (std::size_t idx : tuple.indices) {
        if (used[idx]) repeat = true;
        used[idx] = true;
      }
      if (repeat) continue;
    }
    if (!sunflower_masks(sys, tuple)) continue;
    ++count;
    if (fn) fn(*is_sunflower(sys, tuple));
  }
  return count;
}

std::vector<SunflowerRecord> enumerate_sunflowers(const SetSystem& sys, std::size_t k,
                                                  bool distinct_only, const Budgets& budgets) {
  std::vector<SunflowerRecord> out;
  for_each_sunflower(
      sys, k, distinct_only, [&](const SunflowerRecord& r) { out.push_back(r); }, budgets);
  return out;
}

bool is_rainbow_sunflower(const SetSystem& sys, const TupleOfSets& tuple,
                          const Coloring& partition) {
  check_tuple(sys, tuple);
  if (partition.size() != sys.ground().size) {
    fail(ErrorCode::precondition, "partition does not cover the ground set");
  }
  if (partition.parts() < tuple.size()) {
    fail(ErrorCode::precondition, "partition has fewer parts than the tuple");
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      if (i == j) continue;
      if (!bits::difference_within(sys.mask(tuple[i]), sys.mask(tuple[j]), partition.mask(i))) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t disjoint_pair_census(const SetSystem& sys, const Coloring& bipartition) {
  if (bipartition.parts() != 2) fail(ErrorCode::precondition, "census needs a bipartition");
  if (bipartition.size() != sys.ground().size) {
    fail(ErrorCode::precondition, "bipartition does not cover the ground set");
  }
  std::uint64_t count = 0;
  for (std::size_t s = 0; s < sys.size(); ++s) {
    for (std::size_t t = 0; t < sys.size(); ++t) {
      if (s == t) continue;
      if (bits::difference_within(sys.mask(s), sys.mask(t), bipartition.mask(0)) &&
          bits::difference_within(sys.mask(t), sys.mask(s), bipartition.mask(1))) {
        ++count;
      }
    }
  }
  return count;
}

std::optional<std::size_t> union_trace_search(const SetSystem& sys, std::size_t s,
                                              std::size_t s1, std::size_t s2) {
  check_tuple(sys, TupleOfSets{{s, s1, s2}});
  const ElementSet target = set_union(intersect(sys[s1], sys[s]), intersect(sys[s2], sys[s]));
  for (std::size_t t = 0; t < sys.size(); ++t) {
    if (intersect(sys[t], sys[s]) == target) return t;
  }
  return std::nullopt;
}

LinkFamilies witness_to_link(const SetSystem& sys, const TupleOfSets& pair,
                             const InflationWitness& wit, const ExactRational& n) {
  if (pair.size() != 2 || wit.families.size() != 2) {
    fail(ErrorCode::precondition, "link transform needs a pair and a two-family witness");
  }
  check_tuple(sys, pair);
  LinkFamilies out;
  out.u = intersect(sys[pair[0]], sys[pair[1]]);
  out.link = link(sys, out.u);
  auto map_family = [&](const std::vector<std::size_t>& fam) {
    std::vector<std::size_t> idx;
    for (std::size_t t : fam) {
      if (!out.u.subset_of(sys[t])) {
        fail(ErrorCode::precondition, "witness set does not contain S ∩ T");
      }
      idx.push_back(*out.link.find(difference(sys[t], out.u)));
    }
    return idx;
  };
  out.first = map_family(wit.families[0]);
  out.second = map_family(wit.families[1]);
  out.cross_disjoint = true;
  for (std::size_t a : out.first) {
    for (std::size_t b : out.second) {
      if (!bits::disjoint(out.link.mask(a), out.link.mask(b))) out.cross_disjoint = false;
    }
  }
  out.link_too_small = ExactRational(out.link.size()) < ExactRational(sys.size()) / n;
  return out;
}

SunflowerExperiment sunflower_inflation_experiment(const SetSystem& sys, std::size_t k,
                                                   const ExactRational& n, std::uint64_t samples,
                                                   std::uint64_t seed, bool distinct_only,
                                                   const Budgets& budgets) {
  const auto flowers = enumerate_sunflowers(sys, k, distinct_only, budgets);
  if (flowers.empty()) fail(ErrorCode::infeasible, "the family has no k-petal sunflowers");

  SunflowerExperiment out;
  out.sunflowers_total = flowers.size();

  const BigInt sweep = count_balanced(sys.ground().size, k) *
                       BigInt(checked_tuple_count(sys.size(), k, budgets.tuples));
  const bool exhaustive_colorings = count_balanced(sys.ground().size, k) <= budgets.colorings &&
                                    sweep <= budgets.tuples;
  const SearchMode mode =
      exhaustive_colorings ? SearchMode::exhaustive() : SearchMode::sampled(64, seed);
  out.coloring = best_coloring_search(sys, n, k, mode, budgets).coloring;

  std::vector<std::size_t> picks;
  if (samples >= flowers.size()) {
    out.exhaustive = true;
    for (std::size_t i = 0; i < flowers.size(); ++i) picks.push_back(i);
  } else {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::uint64_t s = 0; s < samples; ++s) {
      picks.push_back(static_cast<std::size_t>(uniform_below(rng, flowers.size())));
    }
  }
  out.examined = picks.size();

  struct Tally {
    std::uint64_t good = 0, oracle = 0, no = 0, unknown = 0;
  };
  const unsigned workers = std::max(1u, budgets.workers);
  std::vector<Tally> tallies(workers);
  parallel_ranges(picks.size(), workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t p = begin; p < end; ++p) {
      const TupleOfSets& tuple = flowers[picks[p]].tuple;
      if (classify(sys, tuple, out.coloring, n).good) {
        ++tallies[w].good;
        continue;
      }
      const Verdict v = inflatable_exact(sys, tuple, n, budgets.oracle_nodes);
      switch (v.status) {
        case Verdict::Status::inflatable: ++tallies[w].oracle; break;
        case Verdict::Status::not_inflatable: ++tallies[w].no; break;
        case Verdict::Status::budget_exceeded: ++tallies[w].unknown; break;
      }
    }
  });
  for (const Tally& t : tallies) {
    out.good_under_best_coloring += t.good;
    out.inflatable_by_oracle += t.oracle;
    out.not_inflatable += t.no;
    out.inconclusive += t.unknown;
  }
  return out;
}

std::string serialize(const DisjointnessGraph& g) {
  std::string out = serialize(g.family);
  out += "!edges\n";
  for (const auto& [a, b] : g.edges) {
    out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
  }
  return out;
}

DisjointnessGraph parse_graph(std::string_view text) {
  const auto marker = text.find("!edges");
  if (marker == std::string_view::npos) fail(ErrorCode::parse, "graph text lacks an !edges line");
  DisjointnessGraph g = disjointness_graph(parse_set_system(text.substr(0, marker)).system);
  std::vector<Edge> edges;
  std::istringstream rest{std::string(text.substr(marker + 6))};
  std::string line;
  while (std::getline(rest, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::size_t a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) fail(ErrorCode::parse, "edge line needs two vertex ids");
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (edges != g.edges) fail(ErrorCode::parse, "edge list does not match vertex disjointness");
  return g;
}

}  // namespace inflation
