#pragma once

#include "inflation/budget.hpp"
#include "inflation/rational.hpp"
#include "inflation/setsystem.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace inflation {

/// C(k+w-1, k-1) · k · 2^(w(k-1)) / n: the guaranteed upper bound on the
/// fraction of n-bad (equivalently, of possibly non-inflatable) k-tuples.
ExactRational bad_fraction_bound(std::size_t k, std::size_t w, const ExactRational& n);

/// 2^w (2w+2) / n, the k = 2 specialisation.
ExactRational bad_fraction_bound_k2(std::size_t w, const ExactRational& n);

/// A bound of at least 1 guarantees nothing.
inline bool is_vacuous(const ExactRational& bound) { return bound >= 1; }

/// (f_size / f)^k: sunflowers guaranteed by the counting argument when every
/// f sets contain one.
ExactRational sunflower_count_lower(std::uint64_t f_size, std::uint64_t f, std::size_t k);

/// Result of enumerating every (balanced coloring, ordered tuple) pair.
struct LemmaCheckReport {
  ExactRational n;
  std::uint64_t colorings = 0;
  BigInt pairs_total = 0;
  BigInt pairs_bad = 0;
  ExactRational empirical;
  ExactRational bound;
  bool pass = false;
  /// Smallest / largest per-coloring bad count.
  std::uint64_t min_bad = 0;
  std::uint64_t max_bad = 0;
  /// min <= average <= bound · |F|^k, all exact.
  bool averaging_holds = false;
};

/// Requires k | |X|; the width used for the bound is sys.width().
LemmaCheckReport exhaustive_lemma_check(const SetSystem& sys, std::size_t k,
                                        const ExactRational& n, const Budgets& budgets = {});

/// Same enumeration, one report per n, sharing the mimic counts.
std::vector<LemmaCheckReport> exhaustive_lemma_check(const SetSystem& sys, std::size_t k,
                                                     std::span<const ExactRational> ns,
                                                     const Budgets& budgets = {});

/// Replays the encoding argument for the bad-at-one-part case over every
/// (balanced coloring, tuple, part) triple with that part bad at n.
struct EncodingAudit {
  std::uint64_t bad_triples = 0;
  std::uint64_t round_trip_failures = 0;
  /// Records whose index exceeds the mimic count (must be 0).
  std::uint64_t index_overflows = 0;
  std::uint64_t distinct_records = 0;
  /// Most distinct recolored colorings seen for a single part, against the
  /// per-part count C(|X|; |X|/k, ...) · C(k+w-1, k-1).
  std::uint64_t distinct_recolorings = 0;
  BigInt recoloring_allowance = 0;
  /// Upper bound on bad_triples: the per-part count summed over parts.
  ExactRational bad_triple_allowance;
};

EncodingAudit audit_encoding(const SetSystem& sys, std::size_t k, const ExactRational& n,
                             const Budgets& budgets = {});

}  // namespace inflation
