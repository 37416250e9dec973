#include "inflation/oracle.hpp"

#include "inflation/error.hpp"

#include <algorithm>

namespace inflation {

CandidateSets candidate_sets(const SetSystem& sys, const TupleOfSets& tuple) {
  check_tuple(sys, tuple);
  const std::size_t k = tuple.size();
  CandidateSets out;
  out.parts.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const bits::Row Si = sys.mask(tuple[i]);
    for (std::size_t t = 0; t < sys.size(); ++t) {
      const bits::Row T = sys.mask(t);
      bool ok = true;
      for (std::size_t j = 0; ok && j < k; ++j) {
        if (j == i) continue;
        const bits::Row Sj = sys.mask(tuple[j]);
        ok = bits::meet_equal(T, Sj, Si, Sj);
      }
      if (ok) out.parts[i].push_back(t);
    }
  }
  return out;
}

bool compatible(const SetSystem& sys, std::size_t ti, std::size_t i, std::size_t tj,
                std::size_t j, const TupleOfSets& tuple) {
  if (i == j) fail(ErrorCode::precondition, "compatible() needs two different parts");
  return bits::meet_equal(sys.mask(ti), sys.mask(tj), sys.mask(tuple[i]), sys.mask(tuple[j]));
}

bool compatible_reduced(const SetSystem& sys, std::size_t ti, std::size_t i, std::size_t tj,
                        std::size_t j, const TupleOfSets& tuple) {
  if (i == j) fail(ErrorCode::precondition, "compatible_reduced() needs two different parts");
  return bits::petals_disjoint(sys.mask(ti), sys.mask(tuple[i]), sys.mask(tj),
                               sys.mask(tuple[j]));
}

const char* to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::inflatable: return "inflatable";
    case Verdict::Status::not_inflatable: return "not-inflatable";
    case Verdict::Status::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

struct BudgetExhausted {};

class InflationSearch {
 public:
  InflationSearch(const SetSystem& sys, const TupleOfSets& tuple, std::size_t threshold,
                  std::uint64_t budget)
      : sys_(sys), tuple_(tuple), k_(tuple.size()), threshold_(threshold), budget_(budget) {}

  Verdict run() {
    Verdict v;
    const CandidateSets cands = candidate_sets(sys_, tuple_);
    std::vector<std::vector<std::size_t>> chosen(k_), remaining(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      chosen[i].push_back(tuple_[i]);
      for (std::size_t t : cands.parts[i]) {
        if (t != tuple_[i]) remaining[i].push_back(t);
      }
    }
    try {
      if (descend(chosen, remaining)) {
        v.status = Verdict::Status::inflatable;
        InflationWitness wit;
        wit.threshold = threshold_;
        for (auto& fam : found_) {
          std::sort(fam.begin(), fam.end());
          wit.families.push_back(fam);
        }
        v.witness = std::move(wit);
      } else {
        v.status = Verdict::Status::not_inflatable;
      }
    } catch (const BudgetExhausted&) {
      v.status = Verdict::Status::budget_exceeded;
    }
    v.nodes_explored = nodes_;
    return v;
  }

 private:
  bool descend(std::vector<std::vector<std::size_t>>& chosen,
               const std::vector<std::vector<std::size_t>>& remaining) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    std::size_t open = k_;
    for (std::size_t i = 0; i < k_; ++i) {
      if (chosen[i].size() + remaining[i].size() < threshold_) return false;
      if (open == k_ && chosen[i].size() < threshold_) open = i;
    }
    if (open == k_) {
      found_ = chosen;
      return true;
    }
    const std::size_t v = remaining[open].front();

    // include v in part `open`: other parts keep only what is compatible with it
    std::vector<std::vector<std::size_t>> next(k_);
    for (std::size_t j = 0; j < k_; ++j) {
      if (j == open) {
        next[j].assign(remaining[j].begin() + 1, remaining[j].end());
        continue;
      }
      for (std::size_t t : remaining[j]) {
        if (compatible_reduced(sys_, v, open, t, j, tuple_)) next[j].push_back(t);
      }
    }
    chosen[open].push_back(v);
    if (descend(chosen, next)) return true;
    chosen[open].pop_back();

    // exclude v
    next = remaining;
    next[open].erase(next[open].begin());
    return descend(chosen, next);
  }

  const SetSystem& sys_;
  const TupleOfSets& tuple_;
  std::size_t k_;
  std::size_t threshold_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

Verdict search_inflation(const SetSystem& sys, const TupleOfSets& tuple, std::size_t threshold,
                         std::uint64_t node_budget) {
  check_tuple(sys, tuple);
  if (tuple.size() < 2) fail(ErrorCode::precondition, "tuples need k >= 2 parts");
  return InflationSearch(sys, tuple, threshold, node_budget).run();
}

Verdict inflatable_exact(const SetSystem& sys, const TupleOfSets& tuple, const ExactRational& n,
                         std::uint64_t node_budget) {
  const std::size_t threshold = size_threshold(sys.size(), n, sys.size() + 1);
  Verdict v = search_inflation(sys, tuple, threshold, node_budget);
  if (v.witness) {
    const WitnessCheck check = verify_witness(sys, *v.witness, tuple, n);
    if (!check) fail(ErrorCode::internal, "oracle produced an invalid witness: " + check.diagnostic);
  }
  return v;
}

std::size_t max_inflation_threshold(const SetSystem& sys, const TupleOfSets& tuple,
                                    std::uint64_t node_budget) {
  std::size_t best = 1;
  for (std::size_t t = 2; t <= sys.size(); ++t) {
    const Verdict v = search_inflation(sys, tuple, t, node_budget);
    if (!v.conclusive()) {
      fail(ErrorCode::budget_exceeded, "oracle node budget exhausted at threshold " +
                                           std::to_string(t));
    }
    if (!v.inflatable()) break;
    best = t;
  }
  return best;
}

}  // namespace inflation
