#pragma once

#include <optional>
#include <vector>

#include "bosp/core/dense_matrix.hpp"

namespace bosp {

/// Lower-triangular L with A = L L^T, or nullopt when a pivot is <= 0.
std::optional<DenseMatrix> cholesky_lower(const DenseMatrix& a);

struct JacobiSvdResult {
    DenseMatrix u;              // rows x cols, columns of unit norm (0 for sigma=0)
    std::vector<double> sigma;  // ascending
    DenseMatrix v;              // cols x cols orthogonal
    bool converged = true;
    std::size_t sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD of an m x k matrix with m >= k.
/// Columns are orthogonalized by right rotations; singular values come out
/// with high relative accuracy, which matters for eigenvalues near zero.
JacobiSvdResult jacobi_svd(DenseMatrix a, std::size_t max_sweeps = 40);

/// Largest singular value.
double spectral_norm(const DenseMatrix& a);

/// sigma_max / sigma_min.
double condition_number_2(const DenseMatrix& a);

struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> perm;
};

/// PA = LU with partial pivoting; throws ContractViolation on exact singularity.
LuFactors lu_factor(DenseMatrix a);
std::vector<double> lu_solve(const LuFactors& f, std::vector<double> b);
DenseMatrix lu_solve(const LuFactors& f, const DenseMatrix& b);
DenseMatrix lu_inverse(const DenseMatrix& a);

/// L^T * R for lower-triangular factors (general fallback multiply).
DenseMatrix transpose_times(const DenseMatrix& l, const DenseMatrix& r);

} // namespace bosp
