#pragma once

#include "inflation/bits.hpp"
#include "inflation/parallel.hpp"
#include "inflation/rational.hpp"
#include "inflation/rng.hpp"
#include "inflation/setsystem.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inflation {

using Color = std::uint32_t;

/// Assignment of every ground element to one of k parts. Most routines
/// require a balanced coloring (all parts of size |X|/k); rainbow partitions
/// and recolored audit records need not be.
class Coloring {
 public:
  Coloring() = default;
  /// Throws ErrorCode::precondition if an id is >= k or k == 0.
  Coloring(std::size_t k, std::vector<Color> assignment);

  std::size_t parts() const { return k_; }
  std::size_t size() const { return assignment_.size(); }
  Color operator[](std::size_t e) const { return assignment_[e]; }
  const std::vector<Color>& assignment() const { return assignment_; }
  bits::Row mask(std::size_t part) const { return masks_.row(part); }

  std::vector<std::size_t> part_sizes() const;
  bool is_balanced() const;
  /// FNV-1a over the assignment, as 16 hex digits.
  std::string digest() const;

  bool operator==(const Coloring& other) const {
    return k_ == other.k_ && assignment_ == other.assignment_;
  }

 private:
  std::size_t k_ = 0;
  std::vector<Color> assignment_;
  bits::BitMatrix masks_;
};

/// Throws ErrorCode::precondition unless c covers exactly sys's ground set
/// with k balanced parts.
void check_balanced(const Coloring& c, const SetSystem& sys, std::size_t k);

/// Uniform over balanced colorings, deterministic per seed. Throws
/// ErrorCode::infeasible when k does not divide |X|.
Coloring sample_balanced(const GroundSet& ground, std::size_t k, std::uint64_t seed);
Coloring sample_balanced(const GroundSet& ground, std::size_t k, Rng& rng);

/// Multinomial |X|! / ((|X|/k)!)^k.
BigInt count_balanced(std::size_t x_size, std::size_t k);

/// The balanced coloring at position `rank` in lexicographic order of
/// assignment vectors.
std::vector<Color> unrank_balanced(std::size_t x_size, std::size_t k, std::uint64_t rank);

/// Throws ErrorCode::budget_exceeded when the count exceeds `budget`,
/// ErrorCode::infeasible when k does not divide |X|.
std::uint64_t checked_balanced_count(std::size_t x_size, std::size_t k, std::uint64_t budget);

/// Streams every balanced coloring once, in lexicographic order:
/// fn(rank, coloring).
template <typename Fn>
void for_each_balanced(std::size_t x_size, std::size_t k, std::uint64_t budget, Fn&& fn) {
  const std::uint64_t total = checked_balanced_count(x_size, k, budget);
  std::vector<Color> a = unrank_balanced(x_size, k, 0);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    fn(rank, Coloring(k, a));
    std::next_permutation(a.begin(), a.end());
  }
}

/// Data-parallel variant: ranks are split into contiguous ranges per
/// worker; fn(rank, coloring, worker) is called exactly once per rank.
template <typename Fn>
void for_each_balanced_parallel(std::size_t x_size, std::size_t k, std::uint64_t budget,
                                unsigned workers, Fn&& fn) {
  const std::uint64_t total = checked_balanced_count(x_size, k, budget);
  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    if (begin == end) return;
    std::vector<Color> a = unrank_balanced(x_size, k, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      fn(rank, Coloring(k, a), w);
      std::next_permutation(a.begin(), a.end());
    }
  });
}

std::vector<Coloring> enumerate_balanced(const GroundSet& ground, std::size_t k,
                                         std::uint64_t budget = 10'000'000);

/// Text format: one line of |X| whitespace-separated part ids in [0, k).
Coloring parse_coloring(std::string_view text, std::size_t k);
std::string serialize(const Coloring& c);

/// The information that identifies a (coloring, tuple) pair that is bad
/// at part `part`: the coloring with S_part recolored to `part`, the other
/// sets, their intersections with S_part, and the 1-based rank of S_part
/// among the sets consistent with all of that.
struct EncodedRecord {
  std::size_t part = 0;
  Coloring recolored;
  std::vector<std::size_t> others;
  std::vector<ElementSet> intersections;
  std::size_t index = 0;

  bool operator==(const EncodedRecord&) const = default;
};

/// Sets T (ascending index) with T ∩ S_i = intersections[i] for every
/// other part and every element of T colored `part` in rec.recolored.
std::vector<std::size_t> encoding_candidates(const EncodedRecord& rec, const SetSystem& sys);

EncodedRecord encode_bad_pair(const Coloring& c, const TupleOfSets& tuple, std::size_t part,
                              const SetSystem& sys);

struct DecodedPair {
  TupleOfSets tuple;
  /// Original colors off S_part; nullopt on S_part, which the record does
  /// not determine.
  std::vector<std::optional<Color>> colors;
};

/// Throws ErrorCode::precondition when rec.index is outside the candidate
/// list.
DecodedPair decode_partial(const EncodedRecord& rec, const SetSystem& sys);

}  // namespace inflation
