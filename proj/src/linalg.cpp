#include "seaweed/linalg.hpp"

#include <utility>

namespace seaweed {

int bareiss_rank(const IntMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) return 0;

  std::vector<mpz_class> a(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[static_cast<std::size_t>(r) * cols + c] = m(r, c);

  auto at = [&](int r, int c) -> mpz_class& { return a[static_cast<std::size_t>(r) * cols + c]; };

  mpz_class prev = 1;
  mpz_class t;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue; // column already exhausted
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(at(piv, c), at(rank, c));

    const mpz_class& p = at(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      mpz_class& head = at(r, col);
      if (head == 0) {
        // row untouched in this column; still needs the pivot scaling
        for (int c = col + 1; c < cols; ++c) {
          t = at(r, c) * p;
          mpz_divexact(at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (int c = col + 1; c < cols; ++c) {
        t = at(r, c) * p - head * at(rank, c);
        mpz_divexact(at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      head = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<RatVector> rational_kernel_basis(const IntMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());

  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m(r, c);

  std::vector<int> pivot_col; // pivot column of each pivot row, in order
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int piv = -1;
    for (int r = prow; r < rows; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[prow]);
    const mpq_class inv = 1 / a[prow][col];
    for (int c = col; c < cols; ++c) a[prow][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == prow || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[prow][c];
    }
    pivot_col.push_back(col);
    ++prow;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    RatVector v(cols);
    for (int c = 0; c < cols; ++c) v(c) = 0;
    v(j) = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v(pivot_col[r]) = -a[r][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace seaweed
