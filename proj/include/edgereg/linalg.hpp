#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace edgereg::linalg {

// Dense GF(2) matrix, rows packed 64 columns per word.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1U; }

  // Destroys the contents.
  std::size_t rank_in_place();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination on exact integers.
std::size_t rational_rank(std::vector<std::vector<mpz_class>> m);

}  // namespace edgereg::linalg
