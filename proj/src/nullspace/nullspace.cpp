#include "bosp/nullspace/nullspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "bosp/core/cg.hpp"
#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"
#include "bosp/projected/dense_kernels.hpp"

namespace bosp {

double estimate_operator_norm(const LinearOperator& op, std::size_t iters,
                              std::uint64_t seed) {
    const std::size_t n = op.dim();
    std::mt19937_64 rng(seed);
    BlockVectors v(n, 1);
    v.fill_uniform(rng);
    double norm = vnorm2(v.col(0));
    if (norm == 0.0) return 0.0;
    vscale(1.0 / norm, v.col(0));
    BlockVectors av(n, 1);
    double est = 0.0;
    for (std::size_t it = 0; it < iters; ++it) {
        op.apply(v, av);
        est = vnorm2(av.col(0));
        if (est == 0.0) return 0.0;
        std::memcpy(v.data(), av.data(), n * sizeof(double));
        vscale(1.0 / est, v.col(0));
    }
    return est;
}

namespace {

// Plain orthonormalization of a block (the nullspace eigensolve is a
// symmetric problem, so Euclidean Gram-Schmidt is the right tool here).
void orthonormalize(BlockVectors& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        auto vj = v.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t i = 0; i < j; ++i) {
                const double c = vdot(v.col(i), vj);
                vaxpy(-c, v.col(i), vj);
            }
        const double nrm = vnorm2(vj);
        if (nrm > 0.0) vscale(1.0 / nrm, vj);
    }
}

struct InverseIterationOutcome {
    BlockVectors v;
    std::vector<double> rayleigh;
    std::vector<double> residual;
};

// Shifted block inverse iteration targeting the smallest eigenvalues of K.
// The shift starts at 1e-3*||K|| and is tightened when progress stalls, so
// that null directions separate from small positive eigenvalues.
InverseIterationOutcome smallest_eigenpairs(const LinearOperator& k, std::size_t block,
                                            double knorm, double zero_thresh,
                                            std::mt19937_64& rng) {
    const std::size_t n = k.dim();
    double sigma = 1e-3 * knorm;
    LinearOperator shifted = LinearOperator::shifted(k, sigma);

    InverseIterationOutcome out;
    out.v = BlockVectors(n, block);
    out.v.fill_uniform(rng);
    orthonormalize(out.v);
    out.rayleigh.assign(block, knorm);
    out.residual.assign(block, knorm);

    BlockVectors kv(n, block);
    double prev_min = std::numeric_limits<double>::infinity();
    for (std::size_t outer = 0; outer < 300; ++outer) {
        CgResult inv = cg_solve(shifted, out.v, BlockVectors(n, block), 1e-10, 10 * n);
        out.v = std::move(inv.x);
        orthonormalize(out.v);
        k.apply(out.v, kv);

        for (std::size_t j = 0; j < block; ++j) {
            auto vj = out.v.col(j);
            auto kvj = kv.col(j);
            out.rayleigh[j] = vdot(vj, kvj);
            double rr = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = kvj[i] - out.rayleigh[j] * vj[i];
                rr += d * d;
            }
            out.residual[j] = std::sqrt(rr);
        }

        double theta_min = std::numeric_limits<double>::infinity();
        bool null_converged = true;
        bool any_null = false;
        for (std::size_t j = 0; j < block; ++j) {
            theta_min = std::min(theta_min, std::fabs(out.rayleigh[j]));
            if (std::fabs(out.rayleigh[j]) < zero_thresh) {
                any_null = true;
                if (out.residual[j] > zero_thresh) null_converged = false;
            }
        }

        if (any_null && null_converged && outer >= 2) break;

        if (!any_null) {
            // candidate smallest eigenvalue is resolved and clearly positive
            std::size_t jmin = 0;
            for (std::size_t j = 1; j < block; ++j)
                if (std::fabs(out.rayleigh[j]) < std::fabs(out.rayleigh[jmin])) jmin = j;
            const double theta = std::fabs(out.rayleigh[jmin]);
            if (outer >= 4 && theta - out.residual[jmin] > zero_thresh &&
                out.residual[jmin] < 1e-2 * theta &&
                std::fabs(theta - prev_min) < 1e-4 * theta)
                break;
        }

        // stalled: move the shift below the current smallest Rayleigh quotient
        if (outer >= 8 && std::fabs(theta_min - prev_min) < 1e-3 * std::max(theta_min, 1e-300)) {
            const double target = std::max({theta_min / 10.0, 1e-14 * knorm, 1e-300});
            if (target < sigma / 2.0) {
                sigma = target;
                shifted = LinearOperator::shifted(k, sigma);
            }
        }
        prev_min = theta_min;
    }
    return out;
}

} // namespace

GeneralizedNullspace compute_nullspace(const LinearOperator& k, const LinearOperator& m,
                                       std::optional<std::size_t> r_hint,
                                       double tol_null, const InnerProduct& ip,
                                       std::uint64_t seed) {
    const std::size_t n = k.dim();
    if (m.dim() != n)
        throw ContractViolation("compute_nullspace: K and M dimension mismatch");

    const double knorm = std::max(estimate_operator_norm(k), 1e-300);
    const double zero_thresh = tol_null * knorm;

    std::size_t block = std::min<std::size_t>(r_hint ? *r_hint + 1 : 3, n);
    std::mt19937_64 rng(seed);

    for (;;) {
        InverseIterationOutcome it = smallest_eigenpairs(k, block, knorm, zero_thresh, rng);

        std::size_t r = 0;
        for (std::size_t j = 0; j < block; ++j)
            if (std::fabs(it.rayleigh[j]) < zero_thresh) ++r;

        if (r == block && block < n) {
            block = std::min(n, block * 2); // whole block looks null, widen it
            continue;
        }

        if (r_hint && r != *r_hint)
            throw RankMismatch("compute_nullspace: detected rank " + std::to_string(r) +
                               " but hint was " + std::to_string(*r_hint));

        GeneralizedNullspace ns;
        ns.r = r;
        if (r == 0) {
            ns.x0 = BlockVectors(n, 0);
            ns.y0 = BlockVectors(n, 0);
            return ns;
        }

        BlockVectors x_raw(n, r);
        std::size_t at = 0;
        for (std::size_t j = 0; j < block; ++j)
            if (std::fabs(it.rayleigh[j]) < zero_thresh)
                x_raw.assign_columns(at++, it.v.columns(j, 1));

        BlockVectors rhs = ip.weighted() ? ip.weight()->apply(x_raw) : x_raw;
        CgResult ysol = cg_solve(m, rhs, BlockVectors(n, r), 1e-12, 10 * n);
        BlockVectors y_raw = std::move(ysol.x);

        DenseMatrix gram = block_inner(ip, x_raw, y_raw).symmetrized();
        auto chol = cholesky_lower(gram);
        if (!chol)
            throw InvalidNullspace("compute_nullspace: nullspace Gram matrix is not SPD");
        // gram = C^T C with C = chol^T; X0 = X C^{-1}, Y0 = Y C^{-1}
        DenseMatrix cinv = lu_inverse(chol->transposed());
        ns.x0 = block_product(x_raw, cinv);
        ns.y0 = block_product(y_raw, cinv);
        return ns;
    }
}

GeneralizedNullspace analytic_nullspace_T(std::size_t n) {
    if (n < 2) throw ContractViolation("analytic_nullspace_T: n must be >= 2");
    GeneralizedNullspace ns;
    ns.r = 1;
    ns.x0 = BlockVectors(n, 1);
    ns.y0 = BlockVectors(n, 1);
    double eta = 0.0;
    for (std::size_t l = 1; l <= n; ++l) {
        const double a = static_cast<double>(l) * static_cast<double>(n - l + 1) / 2.0;
        ns.x0(l - 1, 0) = 1.0;
        ns.y0(l - 1, 0) = a;
        eta += a;
    }
    const double s = 1.0 / std::sqrt(eta);
    vscale(s, ns.x0.col(0));
    vscale(s, ns.y0.col(0));
    return ns;
}

} // namespace bosp
