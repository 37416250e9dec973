#include "inflation/bounds.hpp"

#include "inflation/coloring.hpp"
#include "inflation/error.hpp"
#include "inflation/mimicry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace inflation {

ExactRational bad_fraction_bound(std::size_t k, std::size_t w, const ExactRational& n) {
  if (k < 2) fail(ErrorCode::precondition, "k must be at least 2");
  if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  const BigInt numerator = binomial(k + w - 1, k - 1) * k * pow2(w * (k - 1));
  return ExactRational(numerator) / n;
}

ExactRational bad_fraction_bound_k2(std::size_t w, const ExactRational& n) {
  if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  return ExactRational(pow2(w) * (2 * w + 2)) / n;
}

ExactRational sunflower_count_lower(std::uint64_t f_size, std::uint64_t f, std::size_t k) {
  if (f == 0) fail(ErrorCode::precondition, "f must be at least 1");
  const ExactRational ratio(f_size, f);
  ExactRational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= ratio;
  return out;
}

std::vector<LemmaCheckReport> exhaustive_lemma_check(const SetSystem& sys, std::size_t k,
                                                     std::span<const ExactRational> ns,
                                                     const Budgets& budgets) {
  if (k < 2) fail(ErrorCode::precondition, "k must be at least 2");
  for (const auto& n : ns) {
    if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  }
  const std::uint64_t tuples = checked_tuple_count(sys.size(), k, budgets.tuples);
  const std::uint64_t colorings = checked_balanced_count(sys.ground().size, k, budgets.colorings);

  // One histogram per coloring; every n is answered from it.
  std::vector<std::vector<std::uint64_t>> per_coloring(colorings);
  Budgets inner = budgets;
  inner.workers = 1;
  for_each_balanced_parallel(sys.ground().size, k, budgets.colorings, budgets.workers,
                             [&](std::uint64_t rank, const Coloring& c, unsigned) {
                               per_coloring[rank] = mimic_profile(sys, c, k, inner).histogram;
                             });

  std::vector<LemmaCheckReport> out;
  for (const auto& n : ns) {
    LemmaCheckReport r;
    r.n = n;
    r.colorings = colorings;
    r.pairs_total = BigInt(colorings) * tuples;
    const std::size_t t = size_threshold(sys.size(), n, sys.size() + 1);
    r.min_bad = UINT64_MAX;
    for (const auto& hist : per_coloring) {
      std::uint64_t bad = 0;
      for (std::size_t m = 0; m < hist.size() && m < t; ++m) bad += hist[m];
      r.pairs_bad += bad;
      r.min_bad = std::min(r.min_bad, bad);
      r.max_bad = std::max(r.max_bad, bad);
    }
    if (colorings == 0) r.min_bad = 0;
    r.empirical = r.pairs_total == 0 ? ExactRational(0) : ExactRational(r.pairs_bad, r.pairs_total);
    r.bound = bad_fraction_bound(k, sys.width(), n);
    r.pass = r.empirical <= r.bound;
    // min <= pairs_bad / colorings <= bound * tuples
    r.averaging_holds = BigInt(r.min_bad) * colorings <= r.pairs_bad &&
                        ExactRational(r.pairs_bad, std::max<std::uint64_t>(colorings, 1)) <=
                            r.bound * tuples;
    out.push_back(std::move(r));
  }
  return out;
}

LemmaCheckReport exhaustive_lemma_check(const SetSystem& sys, std::size_t k,
                                        const ExactRational& n, const Budgets& budgets) {
  const ExactRational ns[] = {n};
  return exhaustive_lemma_check(sys, k, ns, budgets).front();
}

EncodingAudit audit_encoding(const SetSystem& sys, std::size_t k, const ExactRational& n,
                             const Budgets& budgets) {
  if (!sys.is_full_width()) fail(ErrorCode::precondition, "encoding audit needs a full-width system");
  const std::uint64_t tuples = checked_tuple_count(sys.size(), k, budgets.tuples);
  EncodingAudit audit;
  std::set<std::tuple<std::size_t, std::vector<Color>, std::vector<std::size_t>,
                      std::vector<ElementSet>, std::size_t>>
      records;
  std::vector<std::set<std::vector<Color>>> recolorings(k);
  for_each_balanced(sys.ground().size, k, budgets.colorings, [&](std::uint64_t, const Coloring& c) {
    for (std::uint64_t r = 0; r < tuples; ++r) {
      const TupleOfSets tuple = tuple_at(r, sys.size(), k);
      const Classification cls = classify(sys, tuple, c, n);
      for (std::size_t j : cls.bad_js) {
        ++audit.bad_triples;
        const EncodedRecord rec = encode_bad_pair(c, tuple, j, sys);
        if (rec.index > cls.per_j_count[j]) ++audit.index_overflows;
        records.emplace(rec.part, rec.recolored.assignment(), rec.others, rec.intersections,
                        rec.index);
        recolorings[rec.part].insert(rec.recolored.assignment());
        const DecodedPair dec = decode_partial(rec, sys);
        bool ok = dec.tuple == tuple;
        for (std::size_t e = 0; ok && e < c.size(); ++e) {
          if (dec.colors[e] && *dec.colors[e] != c[e]) ok = false;
          if (!dec.colors[e] && !sys[tuple[j]].contains(static_cast<Element>(e))) ok = false;
        }
        if (!ok) ++audit.round_trip_failures;
      }
    }
  });
  audit.distinct_records = records.size();
  for (const auto& seen : recolorings)
    audit.distinct_recolorings = std::max<std::uint64_t>(audit.distinct_recolorings, seen.size());
  const std::size_t w = sys.width();
  audit.recoloring_allowance = count_balanced(sys.ground().size, k) * binomial(k + w - 1, k - 1);
  // per part: colorings' · |F|^(k-1) · 2^(w(k-1)) · |F|/n, summed over k parts
  BigInt f_pow = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) f_pow *= sys.size();
  audit.bad_triple_allowance =
      ExactRational(audit.recoloring_allowance * f_pow * pow2(w * (k - 1)) * k * sys.size()) / n;
  return audit;
}

}  // namespace inflation
