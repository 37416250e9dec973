#pragma once

#include "inflation/mimicry.hpp"
#include "inflation/rational.hpp"
#include "inflation/setsystem.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace inflation {

/// parts[i] lists (ascending) every T with T ∩ S_j = S_i ∩ S_j for all
/// j != i. Any valid F_i is a subset of parts[i], since S_j ∈ F_j.
struct CandidateSets {
  std::vector<std::vector<std::size_t>> parts;
};

CandidateSets candidate_sets(const SetSystem& sys, const TupleOfSets& tuple);

/// T_i ∩ T_j = S_i ∩ S_j. Requires i != j.
bool compatible(const SetSystem& sys, std::size_t ti, std::size_t i, std::size_t tj,
                std::size_t j, const TupleOfSets& tuple);

/// (T_i \ S_i) ∩ (T_j \ S_j) = ∅. Agrees with compatible() when ti is a
/// candidate for part i and tj one for part j.
bool compatible_reduced(const SetSystem& sys, std::size_t ti, std::size_t i, std::size_t tj,
                        std::size_t j, const TupleOfSets& tuple);

struct Verdict {
  enum class Status { inflatable, not_inflatable, budget_exceeded };

  Status status = Status::not_inflatable;
  std::optional<InflationWitness> witness;
  std::uint64_t nodes_explored = 0;

  bool inflatable() const { return status == Status::inflatable; }
  bool conclusive() const { return status != Status::budget_exceeded; }
};

const char* to_string(Verdict::Status status);

/// Exhaustive branch and bound over the candidate lists: is there a choice
/// F_i ⊆ C_i with S_i ∈ F_i, |F_i| >= `threshold` and every cross pair
/// compatible? Candidates are tried in ascending index order and the first
/// witness found is returned, already verified.
Verdict search_inflation(const SetSystem& sys, const TupleOfSets& tuple, std::size_t threshold,
                         std::uint64_t node_budget = 1'000'000);

/// search_inflation at threshold ceil(|F| / n); the witness is checked with
/// verify_witness at n.
Verdict inflatable_exact(const SetSystem& sys, const TupleOfSets& tuple, const ExactRational& n,
                         std::uint64_t node_budget = 1'000'000);

/// Largest m such that families of size >= m exist for every part; at
/// least 1. Throws ErrorCode::budget_exceeded when a search is inconclusive.
std::size_t max_inflation_threshold(const SetSystem& sys, const TupleOfSets& tuple,
                                    std::uint64_t node_budget = 1'000'000);

}  // namespace inflation
