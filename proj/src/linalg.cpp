#include "edgereg/linalg.hpp"

#include <bit>
#include <utility>

namespace edgereg::linalg {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

std::size_t BitMatrix::rank_in_place() {
  // pivot_row[c]: row whose lowest set bit is column c, or npos.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_row(cols_, npos);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* row = &data_[r * words_];
    std::size_t w = 0;
    for (;;) {
      while (w < words_ && row[w] == 0) ++w;
      if (w == words_) break;
      const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      if (pivot_row[c] == npos) {
        pivot_row[c] = r;
        ++rank;
        break;
      }
      const std::uint64_t* pivot = &data_[pivot_row[c] * words_];
      // The pivot row is zero below word w.
      for (std::size_t k = w; k < words_; ++k) row[k] ^= pivot[k];
    }
  }
  return rank;
}

std::size_t rational_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const mpz_class& pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = pivot * m[i][j] - lead * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace edgereg::linalg
