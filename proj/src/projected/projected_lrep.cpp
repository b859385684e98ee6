#include "bosp/projected/projected_lrep.hpp"

#include <cmath>

#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"
#include "bosp/projected/dense_kernels.hpp"

namespace bosp {

namespace {

ProjectedLrep finish_assembly(DenseMatrix khat, DenseMatrix mhat) {
    ProjectedLrep p;
    p.d = khat.rows();
    p.khat = khat.symmetrized();
    p.mhat = mhat.symmetrized();
    auto lk = cholesky_lower(p.khat);
    if (!lk) throw NullspaceLeak("assemble_projected: U^T K U is not SPD");
    auto lm = cholesky_lower(p.mhat);
    if (!lm) throw NullspaceLeak("assemble_projected: V^T M V is not SPD");
    p.chol_k = std::move(*lk);
    p.chol_m = std::move(*lm);
    return p;
}

} // namespace

ProjectedLrep assemble_projected(const LinearOperator& k, const LinearOperator& m,
                                 const BlockVectors& u, const BlockVectors& v,
                                 const InnerProduct& ip) {
    (void)ip; // biorthonormality of (U, V) under ip is the caller's precondition;
              // the projected blocks themselves are plain U^T K U and V^T M V
    if (u.dim() != k.dim() || v.dim() != m.dim() || u.cols() != v.cols())
        throw ContractViolation("assemble_projected: shape mismatch");
    const InnerProduct euclid;
    BlockVectors ku = block_apply(k, u);
    BlockVectors mv = block_apply(m, v);
    return finish_assembly(block_inner(euclid, u, ku), block_inner(euclid, v, mv));
}

ProjectedLrep assemble_projected_applied(const BlockVectors& u, const BlockVectors& ku,
                                         const BlockVectors& v, const BlockVectors& mv) {
    const InnerProduct euclid;
    return finish_assembly(block_inner(euclid, u, ku), block_inner(euclid, v, mv));
}

SmallEigenSolution solve_small_lrep(const ProjectedLrep& p, std::size_t k) {
    if (k > p.d) throw ContractViolation("solve_small_lrep: k exceeds d");
    if (p.chol_k.rows() != p.d || p.chol_m.rows() != p.d)
        throw ContractViolation("solve_small_lrep: missing Cholesky factors");

    const DenseMatrix& l = p.chol_k;
    const DenseMatrix& r = p.chol_m;
    DenseMatrix w = matmul_tn(l, r); // L^T R

    JacobiSvdResult svd = jacobi_svd(std::move(w));
    const double smax = svd.sigma.empty() ? 0.0 : svd.sigma.back();
    for (double s : svd.sigma)
        if (s < 1e-14 * smax)
            throw DegenerateSpectrum(
                "solve_small_lrep: singular value at round-off scale, "
                "a near-zero eigenvalue escaped deflation");

    SmallEigenSolution sol;
    sol.lambdas.assign(svd.sigma.begin(), svd.sigma.begin() + k);

    // Yhat = L Phi_k Sigma_k^{-1/2}, Xhat = R Psi_k Sigma_k^{-1/2}
    DenseMatrix phi(p.d, k), psi(p.d, k);
    for (std::size_t j = 0; j < k; ++j) {
        const double inv_sqrt = 1.0 / std::sqrt(svd.sigma[j]);
        for (std::size_t i = 0; i < p.d; ++i) {
            phi(i, j) = svd.u(i, j) * inv_sqrt;
            psi(i, j) = svd.v(i, j) * inv_sqrt;
        }
    }
    sol.yhat = matmul(l, phi);
    sol.xhat = matmul(r, psi);
    return sol;
}

SmallEigenSolution dense_lrep_oracle(const ProjectedLrep& p) {
    return dense_lrep_oracle(p.khat, p.mhat);
}

} // namespace bosp
