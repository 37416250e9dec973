#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace inflation::bits {

using Word = std::uint64_t;
using Row = std::span<const Word>;

inline std::size_t words_for(std::size_t elements) {
  return (elements + 63) / 64;
}

/// Row-major packed bit matrix: one fixed-width row per set or color class.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t columns)
      : words_(words_for(columns)), data_(rows * words_, 0) {}

  std::size_t rows() const { return words_ == 0 ? 0 : data_.size() / words_; }
  std::size_t words() const { return words_; }

  void set(std::size_t row, std::size_t column) {
    data_[row * words_ + column / 64] |= Word{1} << (column % 64);
  }

  Row row(std::size_t r) const {
    return Row(data_.data() + r * words_, words_);
  }

 private:
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

/// (a & b) == (c & d)
inline bool meet_equal(Row a, Row b, Row c, Row d) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) != (c[w] & d[w])) return false;
  }
  return true;
}

/// (t \ s) ⊆ allowed
inline bool difference_within(Row t, Row s, Row allowed) {
  for (std::size_t w = 0; w < t.size(); ++w) {
    if (t[w] & ~s[w] & ~allowed[w]) return false;
  }
  return true;
}

/// (a \ s) ∩ (b \ t) == ∅
inline bool petals_disjoint(Row a, Row s, Row b, Row t) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~s[w] & b[w] & ~t[w]) return false;
  }
  return true;
}

inline bool disjoint(Row a, Row b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return false;
  }
  return true;
}

}  // namespace inflation::bits
