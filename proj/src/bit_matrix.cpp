#include "qpw/bit_matrix.hpp"

#include <algorithm>
#include <bit>

namespace qpw {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool BitMatrix::row_subset(std::size_t sub, std::size_t super) const {
  const auto* a = bits_.data() + sub * words_;
  const auto* b = bits_.data() + super * words_;
  for (std::size_t w = 0; w < words_; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::size_t BitMatrix::first_row_difference(std::size_t sub, std::size_t super) const {
  const auto* a = bits_.data() + sub * words_;
  const auto* b = bits_.data() + super * words_;
  for (std::size_t w = 0; w < words_; ++w)
    if (const auto diff = a[w] & ~b[w]) return w * 64 + std::countr_zero(diff);
  return cols_;
}

bool BitMatrix::all() const { return count() == rows_ * cols_; }

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (auto w : bits_) n += std::popcount(w);
  return n;
}

void BitMatrix::fill(bool value) {
  if (!value) {
    std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t w = 0; w < words_; ++w) {
      const std::size_t live = std::min<std::size_t>(64, cols_ - w * 64);
      bits_[i * words_ + w] = live == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << live) - 1;
    }
}

void BitMatrix::transitive_closure() {
  for (std::size_t k = 0; k < rows_; ++k) {
    const auto* rk = bits_.data() + k * words_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!test(i, k)) continue;
      auto* ri = bits_.data() + i * words_;
      for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
    }
  }
}

}  // namespace qpw
