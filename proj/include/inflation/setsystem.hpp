#pragma once

#include "inflation/bits.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inflation {

using Element = std::uint32_t;

/// Elements are ids 0..size-1; ids >= original_size are padding dummies.
struct GroundSet {
  std::size_t size = 0;
  std::size_t original_size = 0;

  static GroundSet plain(std::size_t size) { return {size, size}; }
  bool is_dummy(Element e) const { return e >= original_size; }
  bool operator==(const GroundSet&) const = default;
};

/// A finite set of element ids, stored strictly increasing.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> members);
  /// Sorts; throws ErrorCode::parse on a repeated member.
  explicit ElementSet(std::vector<Element> members);

  const std::vector<Element>& members() const& { return members_; }
  std::vector<Element> members() && { return std::move(members_); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element e) const;
  bool subset_of(const ElementSet& other) const;
  Element max_member() const { return members_.back(); }

  auto operator<=>(const ElementSet&) const = default;

 private:
  std::vector<Element> members_;
};

ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet difference(const ElementSet& a, const ElementSet& b);

std::string to_string(const ElementSet& s);

/// Ordered, duplicate-free family of sets of size at most `width`. Index
/// identity is meaningful: tuples and witnesses refer to positions.
class SetSystem {
 public:
  SetSystem() = default;
  /// Validates sizes, ground membership and pairwise distinctness; throws
  /// ErrorCode::infeasible on violation.
  SetSystem(GroundSet ground, std::size_t width, std::vector<ElementSet> sets);

  const GroundSet& ground() const { return ground_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  std::optional<std::size_t> find(const ElementSet& s) const;

  bits::Row mask(std::size_t i) const { return masks_.row(i); }
  std::size_t words() const { return masks_.words(); }

  bool is_full_width() const;
  std::size_t empty_set_count() const;

  bool operator==(const SetSystem& other) const {
    return ground_ == other.ground_ && width_ == other.width_ &&
           sets_ == other.sets_;
  }

 private:
  GroundSet ground_;
  std::size_t width_ = 0;
  std::vector<ElementSet> sets_;
  bits::BitMatrix masks_;
};

/// Ordered k-tuple of family indices; repeats allowed.
struct TupleOfSets {
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  std::size_t operator[](std::size_t i) const { return indices[i]; }
  bool operator==(const TupleOfSets&) const = default;
};

/// Throws ErrorCode::precondition if an index is out of range.
void check_tuple(const SetSystem& sys, const TupleOfSets& tuple);

/// Result of pad_to_width. Set indices are preserved, so the back-map only
/// has to strip dummy elements.
struct PaddedSystem {
  SetSystem system;
  std::size_t original_ground = 0;

  ElementSet strip(const ElementSet& s) const;
  std::size_t original_index(std::size_t padded_index) const {
    return padded_index;
  }
};

/// Brings every set to exactly `width` elements with dummy ids that no
/// other set uses, so intersections between distinct sets are unchanged.
PaddedSystem pad_to_width(const SetSystem& sys);

/// Appends dummy ground elements (in no set) until k divides |X|.
SetSystem pad_ground_to_multiple(const SetSystem& sys, std::size_t k);

/// pad_to_width followed by pad_ground_to_multiple.
SetSystem normalize(const SetSystem& sys, std::size_t k);

/// {S \ U : S in sys, U ⊆ S}, first occurrences kept, same ground set.
SetSystem link(const SetSystem& sys, const ElementSet& u);

/// N distinct w-subsets of {0..m-1} chosen uniformly, listed in
/// lexicographic order. Throws ErrorCode::infeasible when N > C(m, w).
SetSystem generate_uniform_family(std::size_t m, std::size_t w, std::size_t count,
                                  std::uint64_t seed);

/// All C(m, w) w-subsets of {0..m-1} in lexicographic order.
SetSystem generate_complete_family(std::size_t m, std::size_t w);

// Text format: '#' comments, optional "!ground <m>" first directive, one set
// per non-blank line as distinct decimal ids, "{}" for the empty set.

struct ParsedSystem {
  SetSystem system;
  /// original_ids[e] is the id that appeared in the input for element e.
  std::vector<std::uint64_t> original_ids;
  bool remapped = false;
};

/// Without a ground directive, ids are remapped densely in ascending order
/// (the identity when they already are 0..m-1). `width` defaults to the
/// largest set size. Throws ErrorCode::parse.
ParsedSystem parse_set_system(std::string_view text,
                              std::optional<std::size_t> width = std::nullopt);

std::string serialize(const SetSystem& sys);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace inflation
