#include "inflation/mimicry.hpp"

#include "inflation/error.hpp"
#include "inflation/parallel.hpp"

#include <algorithm>

namespace inflation {

namespace {

void check_inputs(const SetSystem& sys, const TupleOfSets& tuple, const Coloring& c) {
  check_tuple(sys, tuple);
  check_balanced(c, sys, tuple.size());
}

// Hot path shared by every census: no validation.
bool mimics_unchecked(const SetSystem& sys, std::size_t t, std::size_t j,
                      const TupleOfSets& tuple, const Coloring& c) {
  const bits::Row T = sys.mask(t);
  const bits::Row Sj = sys.mask(tuple[j]);
  if (!bits::difference_within(T, Sj, c.mask(j))) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i == j) continue;
    const bits::Row Si = sys.mask(tuple[i]);
    if (!bits::meet_equal(Si, T, Si, Sj)) return false;
  }
  return true;
}

std::size_t count_unchecked(const SetSystem& sys, std::size_t j, const TupleOfSets& tuple,
                            const Coloring& c) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < sys.size(); ++t) {
    if (mimics_unchecked(sys, t, j, tuple, c)) ++count;
  }
  return count;
}

}  // namespace

bool mimics(const SetSystem& sys, std::size_t t, std::size_t j, const TupleOfSets& tuple,
            const Coloring& c) {
  check_inputs(sys, tuple, c);
  if (t >= sys.size() || j >= tuple.size()) fail(ErrorCode::precondition, "index out of range");
  return mimics_unchecked(sys, t, j, tuple, c);
}

std::vector<std::size_t> mimic_family(const SetSystem& sys, std::size_t j,
                                      const TupleOfSets& tuple, const Coloring& c) {
  check_inputs(sys, tuple, c);
  if (j >= tuple.size()) fail(ErrorCode::precondition, "part index out of range");
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < sys.size(); ++t) {
    if (mimics_unchecked(sys, t, j, tuple, c)) out.push_back(t);
  }
  return out;
}

std::size_t mimic_count(const SetSystem& sys, std::size_t j, const TupleOfSets& tuple,
                        const Coloring& c) {
  check_inputs(sys, tuple, c);
  if (j >= tuple.size()) fail(ErrorCode::precondition, "part index out of range");
  return count_unchecked(sys, j, tuple, c);
}

Classification classify(const SetSystem& sys, const TupleOfSets& tuple, const Coloring& c,
                        const ExactRational& n) {
  check_inputs(sys, tuple, c);
  Classification out;
  out.n = n;
  out.threshold = size_threshold(sys.size(), n, sys.size() + 1);
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    const std::size_t count = count_unchecked(sys, j, tuple, c);
    out.per_j_count.push_back(count);
    if (count < out.threshold) out.bad_js.push_back(j);
  }
  out.good = out.bad_js.empty();
  return out;
}

InflationWitness extract_witness(const SetSystem& sys, const TupleOfSets& tuple,
                                 const Coloring& c, const ExactRational& n) {
  const Classification cls = classify(sys, tuple, c, n);
  if (!cls.good) {
    fail(ErrorCode::precondition, "tuple is not n-good under this coloring");
  }
  InflationWitness wit;
  wit.threshold = cls.threshold;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    wit.families.push_back(mimic_family(sys, j, tuple, c));
  }
  return wit;
}

WitnessCheck verify_witness(const SetSystem& sys, const InflationWitness& wit,
                            const TupleOfSets& tuple, const ExactRational& n) {
  check_tuple(sys, tuple);
  const std::size_t k = tuple.size();
  if (wit.families.size() != k) {
    return {false, "witness has " + std::to_string(wit.families.size()) + " families for a " +
                       std::to_string(k) + "-tuple"};
  }
  const ExactRational needed = ExactRational(sys.size()) / n;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& fam = wit.families[j];
    for (std::size_t t : fam) {
      if (t >= sys.size()) return {false, "family " + std::to_string(j) + " has a bad index"};
    }
    if (std::find(fam.begin(), fam.end(), tuple[j]) == fam.end()) {
      return {false, "family " + std::to_string(j) + " does not contain S_" + std::to_string(j)};
    }
    if (ExactRational(fam.size()) < needed) {
      return {false, "family " + std::to_string(j) + " has " + std::to_string(fam.size()) +
                         " sets, fewer than |F|/n = " + to_fraction_string(needed)};
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const ElementSet target = intersect(sys[tuple[i]], sys[tuple[j]]);
      for (std::size_t ti : wit.families[i]) {
        for (std::size_t tj : wit.families[j]) {
          if (intersect(sys[ti], sys[tj]) != target) {
            return {false, "sets " + std::to_string(ti) + " (family " + std::to_string(i) +
                               ") and " + std::to_string(tj) + " (family " + std::to_string(j) +
                               ") meet in " + to_string(intersect(sys[ti], sys[tj])) +
                               " instead of " + to_string(target)};
          }
        }
      }
    }
  }
  return {true, {}};
}

Census MimicProfile::census(const ExactRational& n) const {
  const std::size_t t = size_threshold(family_size, n, family_size + 1);
  Census out;
  out.total = total;
  for (std::size_t m = 0; m < histogram.size() && m < t; ++m) out.bad_count += histogram[m];
  return out;
}

std::uint64_t checked_tuple_count(std::size_t family_size, std::size_t k, std::uint64_t budget) {
  BigInt total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= family_size;
  if (total > budget) {
    fail(ErrorCode::budget_exceeded, total.str() + " tuples exceed the budget of " +
                                         std::to_string(budget));
  }
  return total.convert_to<std::uint64_t>();
}

TupleOfSets tuple_at(std::uint64_t rank, std::size_t family_size, std::size_t k) {
  TupleOfSets tuple;
  tuple.indices.assign(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    tuple.indices[i] = static_cast<std::size_t>(rank % family_size);
    rank /= family_size;
  }
  return tuple;
}

MimicProfile mimic_profile(const SetSystem& sys, const Coloring& c, std::size_t k,
                           const Budgets& budgets) {
  check_balanced(c, sys, k);
  MimicProfile out;
  out.family_size = sys.size();
  out.histogram.assign(sys.size() + 1, 0);
  if (sys.empty()) return out;
  out.total = checked_tuple_count(sys.size(), k, budgets.tuples);

  const unsigned workers = std::max(1u, budgets.workers);
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(sys.size() + 1, 0));
  parallel_ranges(out.total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    for (std::uint64_t r = begin; r < end; ++r) {
      const TupleOfSets tuple = tuple_at(r, sys.size(), k);
      std::size_t least = sys.size();
      for (std::size_t j = 0; j < k && least > 0; ++j) {
        least = std::min(least, count_unchecked(sys, j, tuple, c));
      }
      ++partial[w][least];
    }
  });
  for (const auto& p : partial) {
    for (std::size_t m = 0; m < p.size(); ++m) out.histogram[m] += p[m];
  }
  return out;
}

Census count_bad(const SetSystem& sys, const Coloring& c, const ExactRational& n,
                 std::size_t k, const Budgets& budgets) {
  if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  return mimic_profile(sys, c, k, budgets).census(n);
}

BestColoring best_coloring_search(const SetSystem& sys, const ExactRational& n, std::size_t k,
                                  const SearchMode& mode, const Budgets& budgets) {
  if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  if (k < 2) fail(ErrorCode::precondition, "k must be at least 2");
  checked_tuple_count(sys.size(), k, budgets.tuples);
  Budgets inner = budgets;
  inner.workers = 1;

  struct Best {
    bool set = false;
    std::uint64_t rank = 0;
    Coloring coloring;
    Census census;
  };
  auto better = [](const Best& a, const Best& b) {
    if (!b.set) return a.set;
    if (!a.set) return false;
    if (a.census.bad_count != b.census.bad_count) return a.census.bad_count < b.census.bad_count;
    return a.rank < b.rank;
  };

  const unsigned workers = std::max(1u, budgets.workers);
  std::vector<Best> partial(workers);
  std::uint64_t examined = 0;

  if (mode.kind == SearchMode::Kind::exhaustive) {
    examined = checked_balanced_count(sys.ground().size, k, budgets.colorings);
    for_each_balanced_parallel(
        sys.ground().size, k, budgets.colorings, workers,
        [&](std::uint64_t rank, const Coloring& c, unsigned w) {
          Best cand{true, rank, c, count_bad(sys, c, n, k, inner)};
          if (better(cand, partial[w])) partial[w] = std::move(cand);
        });
  } else {
    if (mode.trials == 0) fail(ErrorCode::precondition, "sampled search needs trials > 0");
    // Draw sequentially so the sample set does not depend on worker count.
    Rng rng(mode.seed);
    std::vector<Coloring> drawn;
    drawn.reserve(mode.trials);
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
      drawn.push_back(sample_balanced(sys.ground(), k, rng));
    }
    examined = mode.trials;
    parallel_ranges(mode.trials, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
      for (std::uint64_t r = begin; r < end; ++r) {
        Best cand{true, r, drawn[r], count_bad(sys, drawn[r], n, k, inner)};
        if (better(cand, partial[w])) partial[w] = std::move(cand);
      }
    });
  }
  Best best;
  for (auto& p : partial) {
    if (better(p, best)) best = std::move(p);
  }
  return {std::move(best.coloring), best.census, examined};
}

}  // namespace inflation
