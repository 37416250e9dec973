#pragma once

#include "inflation/budget.hpp"
#include "inflation/coloring.hpp"
#include "inflation/mimicry.hpp"
#include "inflation/oracle.hpp"
#include "inflation/rational.hpp"
#include "inflation/setsystem.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inflation {

using Edge = std::pair<std::size_t, std::size_t>;

/// Vertices are the sets of `family`; an edge joins two disjoint sets.
/// Edges are stored with first < second, sorted.
struct DisjointnessGraph {
  SetSystem family;
  std::vector<Edge> edges;

  std::size_t vertex_count() const { return family.size(); }
  bool has_edge(std::size_t a, std::size_t b) const;
};

/// Disjointness graph of any family. Empty sets are rejected with
/// ErrorCode::infeasible (an empty set is disjoint from itself).
DisjointnessGraph disjointness_graph(const SetSystem& family);

/// KG(m, w): all w-subsets of {0..m-1}, edges between disjoint ones.
DisjointnessGraph kneser(std::size_t m, std::size_t w);

struct InducedGraph {
  DisjointnessGraph graph;
  /// back_map[v] = vertex of the parent graph.
  std::vector<std::size_t> back_map;
};

/// Vertex-induced subgraph on `vertices` (kept in the given order).
InducedGraph induced(const DisjointnessGraph& g, const std::vector<std::size_t>& vertices);

/// True iff the parts are disjoint, duplicate-free, in range, and every
/// cross pair is an edge.
bool verify_biclique(const DisjointnessGraph& g, const std::vector<std::size_t>& part_a,
                     const std::vector<std::size_t>& part_b);

struct BicliqueWitness {
  std::vector<std::size_t> part_a;
  std::vector<std::size_t> part_b;
  Coloring coloring;
};

/// Runs the coloring pipeline on the pair (S, T) = e: looks for a balanced
/// coloring of the (ground-padded) vertex family under which the pair is
/// n-good, and returns the two mimic families as a biclique of size
/// >= |V| / n per side. nullopt when no examined coloring certifies.
std::optional<BicliqueWitness> edge_biclique_witness(const DisjointnessGraph& g, const Edge& e,
                                                     const ExactRational& n,
                                                     const SearchMode& strategy,
                                                     const Budgets& budgets = {});

/// Kernel and petals of a sunflower tuple.
struct SunflowerRecord {
  TupleOfSets tuple;
  ElementSet kernel;
  std::vector<ElementSet> petals;
};

/// A record iff every pairwise intersection equals the common
/// intersection.
std::optional<SunflowerRecord> is_sunflower(const SetSystem& sys, const TupleOfSets& tuple);

/// Calls fn for every ordered sunflower k-tuple in index order; returns the
/// count. With distinct_only, tuples repeating a set are skipped.
std::uint64_t for_each_sunflower(const SetSystem& sys, std::size_t k, bool distinct_only,
                                 const std::function<void(const SunflowerRecord&)>& fn,
                                 const Budgets& budgets = {});

std::vector<SunflowerRecord> enumerate_sunflowers(const SetSystem& sys, std::size_t k,
                                                  bool distinct_only = true,
                                                  const Budgets& budgets = {});

/// S_i \ S_j ⊆ X_i for all i != j. The partition need not be balanced.
bool is_rainbow_sunflower(const SetSystem& sys, const TupleOfSets& tuple,
                          const Coloring& partition);

/// Ordered pairs of distinct sets with S \ T ⊆ X_0 and T \ S ⊆ X_1.
std::uint64_t disjoint_pair_census(const SetSystem& sys, const Coloring& bipartition);

/// First T (ascending) with T ∩ S = (S_1 ∩ S) ∪ (S_2 ∩ S).
std::optional<std::size_t> union_trace_search(const SetSystem& sys, std::size_t s,
                                              std::size_t s1, std::size_t s2);

/// For an inflatable pair (S, T) with witness (F(S), F(T)): the sets
/// S' \ U, T' \ U with U = S ∩ T, as two cross-wise disjoint subfamilies of
/// the link at U.
struct LinkFamilies {
  ElementSet u;
  SetSystem link;
  std::vector<std::size_t> first;   // indices into link
  std::vector<std::size_t> second;  // indices into link
  bool cross_disjoint = false;
  /// |link| < |F| / n: the link is too small for the size claim.
  bool link_too_small = false;
};

LinkFamilies witness_to_link(const SetSystem& sys, const TupleOfSets& pair,
                             const InflationWitness& wit, const ExactRational& n);

struct SunflowerExperiment {
  std::uint64_t sunflowers_total = 0;
  std::uint64_t examined = 0;
  bool exhaustive = false;
  std::uint64_t good_under_best_coloring = 0;
  std::uint64_t inflatable_by_oracle = 0;
  std::uint64_t not_inflatable = 0;
  std::uint64_t inconclusive = 0;
  Coloring coloring;

  std::uint64_t inflatable() const { return good_under_best_coloring + inflatable_by_oracle; }
  ExactRational fraction() const {
    return examined == 0 ? ExactRational(0) : ExactRational(inflatable(), examined);
  }
};

/// Classifies sunflowers as inflatable: first under one coloring chosen by
/// best_coloring_search (exhaustive when affordable, otherwise sampled per
/// seed), falling back to the exact oracle for tuples that are bad there.
/// When `samples` is at least the sunflower count every sunflower is
/// classified; otherwise `samples` draws are taken uniformly with
/// replacement. Throws ErrorCode::infeasible when there are no sunflowers.
/// `sys` must already be normalized for k.
SunflowerExperiment sunflower_inflation_experiment(const SetSystem& sys, std::size_t k,
                                                   const ExactRational& n, std::uint64_t samples,
                                                   std::uint64_t seed, bool distinct_only = true,
                                                   const Budgets& budgets = {});

/// Vertex lines in set-system format, then "!edges" and one "i j" per line.
std::string serialize(const DisjointnessGraph& g);
DisjointnessGraph parse_graph(std::string_view text);

}  // namespace inflation
