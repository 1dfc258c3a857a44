#include "seaweed/linalg.hpp"

#include "oracle_rank.hpp"
#include "seaweed/prng.hpp"

#include <doctest.h>

using namespace seaweed;

namespace {

IntMatrix random_matrix(SplitMix64& g, int rows, int cols, long bound) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = g.symmetric(bound);
  return m;
}

} // namespace

TEST_CASE("bareiss rank on fixed matrices") {
  IntMatrix z = IntMatrix::Zero(3, 4);
  CHECK(bareiss_rank(z) == 0);

  IntMatrix id = IntMatrix::Identity(5, 5);
  CHECK(bareiss_rank(id) == 5);

  IntMatrix borel(2, 2); // Phi_f of the sl2 Borel at f = X_alpha^*
  borel << 0, 2, -2, 0;
  CHECK(bareiss_rank(borel) == 2);

  IntMatrix sing(3, 3);
  sing << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(bareiss_rank(sing) == 2);

  IntMatrix empty(0, 0);
  CHECK(bareiss_rank(empty) == 0);
}

TEST_CASE("bareiss agrees with the rational elimination oracle") {
  SplitMix64 g(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(g.below(20));
    const int cols = 1 + static_cast<int>(g.below(20));
    IntMatrix m;
    if (trial % 2 == 0) {
      m = random_matrix(g, rows, cols, 1 << 16);
    } else {
      // low-rank product to force rank deficiency
      const int r = static_cast<int>(g.below(std::min(rows, cols) + 1));
      m = r == 0 ? IntMatrix::Zero(rows, cols)
                 : IntMatrix(random_matrix(g, rows, r, 64) * random_matrix(g, r, cols, 64));
    }
    CAPTURE(trial);
    CHECK(bareiss_rank(m) == oracle_rational_rank(m));
  }
}

TEST_CASE("bareiss rank on antisymmetric matrices is even") {
  SplitMix64 g(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(g.below(16));
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = g.symmetric(1 << 20);
        m(j, i) = -m(i, j);
      }
    CHECK(bareiss_rank(m) % 2 == 0);
  }
}

TEST_CASE("rational kernel basis") {
  IntMatrix z = IntMatrix::Zero(2, 3);
  CHECK(rational_kernel_basis(z).size() == 3);

  IntMatrix borel(2, 2);
  borel << 0, 2, -2, 0;
  CHECK(rational_kernel_basis(borel).empty());

  SplitMix64 g(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(g.below(10));
    const int cols = 1 + static_cast<int>(g.below(10));
    const IntMatrix m = random_matrix(g, rows, cols, 1000);
    const auto basis = rational_kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == cols - bareiss_rank(m));
    for (const auto& v : basis) {
      for (int r = 0; r < rows; ++r) {
        mpq_class dot = 0;
        for (int c = 0; c < cols; ++c) dot += v(c) * m(r, c);
        CHECK(dot == 0);
      }
    }
  }
}
