#pragma once

#include <optional>

#include "bosp/core/block_vectors.hpp"
#include "bosp/core/inner_product.hpp"
#include "bosp/core/linear_operator.hpp"

namespace bosp {

/// Basis (X0, Y0) of the generalized nullspace of H: K X0 = 0, M Y0 = B X0
/// and X0^T B Y0 = I (B is the identity for the standard problem).
struct GeneralizedNullspace {
    std::size_t r = 0;
    BlockVectors x0;
    BlockVectors y0;

    bool empty() const { return r == 0; }
};

/// Power-iteration estimate of the spectral norm of a symmetric operator.
double estimate_operator_norm(const LinearOperator& op, std::size_t iters = 50,
                              std::uint64_t seed = 12345);

/// Detects N(K) by shifted block inverse iteration on K + sigma*I with
/// sigma = 1e-3 * ||K||, declares an eigenvalue zero when its Rayleigh
/// quotient falls below tol_null * ||K||, solves M y = B x by CG, then
/// normalizes through the Cholesky factor of the nullspace Gram matrix.
/// Throws RankMismatch when r_hint disagrees with the detected rank and
/// InvalidNullspace when the Gram matrix is not SPD.
GeneralizedNullspace compute_nullspace(const LinearOperator& k, const LinearOperator& m,
                                       std::optional<std::size_t> r_hint = std::nullopt,
                                       double tol_null = 1e-10,
                                       const InnerProduct& ip = InnerProduct{},
                                       std::uint64_t seed = 777);

/// Closed-form pair for K = T(-1), M = T(0): x0 = ones and
/// y0_l = l(n-l+1)/2, normalized so x0^T y0 = 1.
GeneralizedNullspace analytic_nullspace_T(std::size_t n);

} // namespace bosp
