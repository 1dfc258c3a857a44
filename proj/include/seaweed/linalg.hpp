#ifndef SEAWEED_LINALG_HPP
#define SEAWEED_LINALG_HPP

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace seaweed {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RatVector = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// The elimination runs over arbitrary-precision integers, with row pivoting
/// and column skipping, so it is exact for any input and detects rank
/// deficiency without tolerance thresholds. One-step Bareiss keeps every
/// intermediate entry equal to a minor of the input, so the division by the
/// previous pivot is exact at each step.
int bareiss_rank(const IntMatrix& m);

/// Exact basis of the nullspace { v : m v = 0 } over the rationals,
/// by Gauss-Jordan elimination on mpq entries. Returns one vector per free
/// column of the reduced row echelon form (empty list for full column rank).
std::vector<RatVector> rational_kernel_basis(const IntMatrix& m);

} // namespace seaweed

#endif
