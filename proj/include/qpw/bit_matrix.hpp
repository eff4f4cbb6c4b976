#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qpw {

// Dense boolean matrix with 64-bit packed rows. Row i holds the set
// {j : (i, j) present}, so row inclusion tests and row unions are word-wise.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool test(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = bits_[i * words_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  // row(sub) is a subset of row(super).
  bool row_subset(std::size_t sub, std::size_t super) const;
  // Smallest j in row(sub) but not in row(super), or cols() if none.
  std::size_t first_row_difference(std::size_t sub, std::size_t super) const;

  bool all() const;
  std::size_t count() const;
  void fill(bool value);

  // Warshall closure on a square matrix; does not add reflexive pairs.
  void transitive_closure();

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace qpw
