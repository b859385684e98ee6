#include "bosp/core/cg.hpp"

#include <cmath>
#include <cstring>

#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"

namespace bosp {

CgResult cg_solve(const LinearOperator& op, const BlockVectors& rhs,
                  const BlockVectors& x0, double tol, std::size_t max_iter) {
    if (rhs.dim() != op.dim() || x0.dim() != op.dim() || rhs.cols() != x0.cols())
        throw ContractViolation("cg_solve: shape mismatch");

    const std::size_t n = op.dim();
    CgResult result;
    result.x = x0;

    BlockVectors xcol(n, 1), acol(n, 1), rcol(n, 1), pcol(n, 1);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        auto b = rhs.col(j);
        const double bnorm = vnorm2(b);
        auto x = result.x.col(j);
        if (bnorm == 0.0) continue;

        std::memcpy(xcol.data(), x.data(), n * sizeof(double));
        op.apply(xcol, acol);
        auto r = rcol.col(0);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - acol.col(0)[i];
        std::memcpy(pcol.data(), rcol.data(), n * sizeof(double));

        double rr = vdot(r, r);
        std::size_t it = 0;
        while (std::sqrt(rr) > tol * bnorm && it < max_iter) {
            op.apply(pcol, acol);
            auto ap = acol.col(0);
            auto p = pcol.col(0);
            const double pap = vdot(p, ap);
            if (pap <= 0.0) {
                // SPSD direction hit; keep the current iterate
                result.breakdown = true;
                break;
            }
            const double alpha = rr / pap;
            vaxpy(alpha, p, xcol.col(0));
            vaxpy(-alpha, ap, r);
            const double rr_new = vdot(r, r);
            const double beta = rr_new / rr;
            rr = rr_new;
            for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
            ++it;
        }
        result.max_iterations_used = std::max(result.max_iterations_used, it);
        std::memcpy(x.data(), xcol.data(), n * sizeof(double));
    }
    return result;
}

} // namespace bosp
