#pragma once

#include <optional>
#include <vector>

#include "bosp/core/block_vectors.hpp"
#include "bosp/core/dense_matrix.hpp"
#include "bosp/core/inner_product.hpp"
#include "bosp/core/linear_operator.hpp"

namespace bosp {

/// Dense d x d pair (Khat, Mhat) of the projected LREP. Both blocks are SPD
/// whenever the search subspace is properly deflated; the Cholesky factors
/// computed at assembly double as the factorization step of the small solve.
struct ProjectedLrep {
    std::size_t d = 0;
    DenseMatrix khat;
    DenseMatrix mhat;
    // cached lower-triangular factors khat = L L^T, mhat = R R^T
    DenseMatrix chol_k;
    DenseMatrix chol_m;
};

struct SmallEigenSolution {
    std::vector<double> lambdas; // ascending, strictly positive
    DenseMatrix xhat;            // d x k
    DenseMatrix yhat;            // d x k
};

/// Khat = U^T (K U), Mhat = V^T (M V), both symmetrized as (A + A^T)/2.
/// Throws NullspaceLeak when either block fails Cholesky.
ProjectedLrep assemble_projected(const LinearOperator& k, const LinearOperator& m,
                                 const BlockVectors& u, const BlockVectors& v,
                                 const InnerProduct& ip);

/// Same assembly when K*U and M*V are already at hand.
ProjectedLrep assemble_projected_applied(const BlockVectors& u, const BlockVectors& ku,
                                         const BlockVectors& v, const BlockVectors& mv);

/// Small dense LREP via two Cholesky factorizations and one SVD of
/// W = L^T R: the positive eigenvalues are the singular values, and
/// Yhat = L Phi Sigma^{-1/2}, Xhat = R Psi Sigma^{-1/2} reconstruct the
/// biorthogonal eigenvectors. Returns the k smallest pairs.
SmallEigenSolution solve_small_lrep(const ProjectedLrep& p, std::size_t k);

/// Test oracle: forms the full 2d x 2d nonsymmetric [[0,K],[M,0]], runs a
/// general real eigensolver, keeps positive eigenvalues and biorthonormalizes
/// their eigenvectors. Inputs need not be SPD.
SmallEigenSolution dense_lrep_oracle(const DenseMatrix& khat, const DenseMatrix& mhat);
SmallEigenSolution dense_lrep_oracle(const ProjectedLrep& p);

} // namespace bosp
