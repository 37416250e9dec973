#pragma once

#include "inflation/budget.hpp"
#include "inflation/coloring.hpp"
#include "inflation/rational.hpp"
#include "inflation/setsystem.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace inflation {

/// Mimic counts of one tuple under one coloring, and the verdict at n.
struct Classification {
  ExactRational n;
  /// Smallest integer >= |F| / n.
  std::size_t threshold = 0;
  std::vector<std::size_t> per_j_count;
  std::vector<std::size_t> bad_js;
  bool good = false;
};

/// Subfamilies F_1..F_k (family indices) certifying inflatability.
struct InflationWitness {
  std::vector<std::vector<std::size_t>> families;
  std::size_t threshold = 0;

  bool operator==(const InflationWitness&) const = default;
};

struct WitnessCheck {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// T mimics S_j: S_i ∩ T = S_i ∩ S_j for every i != j, and T \ S_j lies in
/// part j.
bool mimics(const SetSystem& sys, std::size_t t, std::size_t j, const TupleOfSets& tuple,
            const Coloring& c);

std::vector<std::size_t> mimic_family(const SetSystem& sys, std::size_t j,
                                      const TupleOfSets& tuple, const Coloring& c);

std::size_t mimic_count(const SetSystem& sys, std::size_t j, const TupleOfSets& tuple,
                        const Coloring& c);

/// Exact: part j is bad when its mimic count is below |F| / n.
Classification classify(const SetSystem& sys, const TupleOfSets& tuple, const Coloring& c,
                        const ExactRational& n);

/// The mimic families of a good tuple. Throws ErrorCode::precondition when
/// the tuple is bad at n under c.
InflationWitness extract_witness(const SetSystem& sys, const TupleOfSets& tuple,
                                 const Coloring& c, const ExactRational& n);

/// Checks the inflation definition literally: S_j in families[j],
/// |families[j]| >= |F| / n and T_i ∩ T_j = S_i ∩ S_j on every cross pair.
/// Reports the first failure.
WitnessCheck verify_witness(const SetSystem& sys, const InflationWitness& wit,
                            const TupleOfSets& tuple, const ExactRational& n);

struct Census {
  std::uint64_t bad_count = 0;
  std::uint64_t total = 0;

  ExactRational fraction() const {
    return total == 0 ? ExactRational(0) : ExactRational(bad_count, total);
  }
  bool operator==(const Census&) const = default;
};

/// Distribution of min_j (mimic count) over all |F|^k ordered tuples under
/// one coloring. A tuple is n-bad exactly when that minimum is below the
/// threshold, so one profile answers every n.
struct MimicProfile {
  std::size_t family_size = 0;
  /// histogram[m] = number of tuples whose smallest mimic count is m.
  std::vector<std::uint64_t> histogram;
  std::uint64_t total = 0;

  Census census(const ExactRational& n) const;
};

/// |F|^k, or ErrorCode::budget_exceeded when it exceeds the tuple budget.
std::uint64_t checked_tuple_count(std::size_t family_size, std::size_t k, std::uint64_t budget);

/// Decodes tuple number `rank` (base-|F| digits, first part most
/// significant).
TupleOfSets tuple_at(std::uint64_t rank, std::size_t family_size, std::size_t k);

MimicProfile mimic_profile(const SetSystem& sys, const Coloring& c, std::size_t k,
                           const Budgets& budgets = {});

/// Exact number of n-bad tuples among all |F|^k ordered tuples under c.
Census count_bad(const SetSystem& sys, const Coloring& c, const ExactRational& n,
                 std::size_t k, const Budgets& budgets = {});

struct SearchMode {
  enum class Kind { sampled, exhaustive };
  Kind kind = Kind::sampled;
  std::uint64_t trials = 64;
  std::uint64_t seed = 1;

  static SearchMode exhaustive() { return {Kind::exhaustive, 0, 0}; }
  static SearchMode sampled(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::sampled, trials, seed};
  }
};

struct BestColoring {
  Coloring coloring;
  Census census;
  std::uint64_t examined = 0;
};

/// The coloring with the fewest n-bad tuples among those examined; ties go
/// to the first examined. Exhaustive mode examines every balanced coloring
/// in lexicographic order, sampled mode draws `trials` colorings from one
/// seeded stream.
BestColoring best_coloring_search(const SetSystem& sys, const ExactRational& n, std::size_t k,
                                  const SearchMode& mode, const Budgets& budgets = {});

}  // namespace inflation
