#include "bosp/biorth/biorth.hpp"

#include <cmath>
#include <cstring>

#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"
#include "bosp/projected/dense_kernels.hpp"

namespace bosp {

namespace {

double sign_or_plus(double v) { return v < 0.0 ? -1.0 : 1.0; }

// One full pass of the column-sequential loop over (p, q) pairs already
// stored in the output blocks. classical=true reads projection coefficients
// from the original columns instead of the running residuals.
BiorthOutcome gs_biorth(const BlockVectors& x, const BlockVectors& y,
                        const InnerProduct& ip, double drop_tol, bool classical) {
    if (x.dim() != y.dim() || x.cols() != y.cols())
        throw ContractViolation("biorth: X and Y must have equal shape");

    const std::size_t n = x.dim();
    const std::size_t m = x.cols();

    BlockVectors p(n, m), q(n, m);
    std::vector<std::size_t> kept, dropped;

    std::vector<double> pl(n), ql(n);
    for (std::size_t l = 0; l < m; ++l) {
        std::memcpy(pl.data(), x.col(l).data(), n * sizeof(double));
        std::memcpy(ql.data(), y.col(l).data(), n * sizeof(double));

        for (std::size_t kk = 0; kk < kept.size(); ++kk) {
            auto pj = p.col(kk);
            auto qj = q.col(kk);
            const double r = classical ? ip.dot(qj, x.col(l)) : ip.dot(qj, pl);
            vaxpy(-r, pj, std::span<double>(pl));
            const double s = classical ? ip.dot(pj, y.col(l)) : ip.dot(pj, ql);
            vaxpy(-s, qj, std::span<double>(ql));
        }

        const double pnorm = ip.norm(pl);
        const double qnorm = ip.norm(ql);
        const double eta = ip.dot(pl, ql);
        if (pnorm == 0.0 || qnorm == 0.0 || std::fabs(eta) < drop_tol * pnorm * qnorm) {
            dropped.push_back(l);
            continue;
        }
        const double scale = 1.0 / std::sqrt(std::fabs(eta));
        const double sgn = sign_or_plus(eta);
        auto pk = p.col(kept.size());
        auto qk = q.col(kept.size());
        for (std::size_t i = 0; i < n; ++i) {
            pk[i] = sgn * pl[i] * scale;
            qk[i] = ql[i] * scale;
        }
        kept.push_back(l);
    }

    BiorthOutcome out;
    out.basis.p = p.columns(0, kept.size());
    out.basis.q = q.columns(0, kept.size());
    out.basis.ip = ip;
    out.kept_columns = std::move(kept);
    out.dropped_columns = std::move(dropped);
    return out;
}

// Second subtraction pass over an already-built basis (twice is enough).
void rebiorth_pass(BiorthBasis& b) {
    const std::size_t m = b.p.cols();
    const std::size_t n = b.p.dim();
    std::vector<double> pl(n), ql(n);
    for (std::size_t l = 0; l < m; ++l) {
        std::memcpy(pl.data(), b.p.col(l).data(), n * sizeof(double));
        std::memcpy(ql.data(), b.q.col(l).data(), n * sizeof(double));
        for (std::size_t j = 0; j < l; ++j) {
            auto pj = b.p.col(j);
            auto qj = b.q.col(j);
            const double r = b.ip.dot(qj, pl);
            vaxpy(-r, pj, std::span<double>(pl));
            const double s = b.ip.dot(pj, ql);
            vaxpy(-s, qj, std::span<double>(ql));
        }
        const double eta = b.ip.dot(pl, ql);
        if (eta == 0.0) continue;
        const double scale = 1.0 / std::sqrt(std::fabs(eta));
        const double sgn = sign_or_plus(eta);
        auto pk = b.p.col(l);
        auto qk = b.q.col(l);
        for (std::size_t i = 0; i < n; ++i) {
            pk[i] = sgn * pl[i] * scale;
            qk[i] = ql[i] * scale;
        }
    }
}

} // namespace

BiorthOutcome mgs_biorth(const BlockVectors& x, const BlockVectors& y,
                         const InnerProduct& ip, double drop_tol) {
    BiorthOutcome out = gs_biorth(x, y, ip, drop_tol, /*classical=*/false);
    if (out.basis.p.cols() > 1 &&
        biorth_residual(out.basis.p, out.basis.q, ip) > 1e-10)
        rebiorth_pass(out.basis);
    return out;
}

BiorthOutcome cgs_biorth(const BlockVectors& x, const BlockVectors& y,
                         const InnerProduct& ip, double drop_tol) {
    return gs_biorth(x, y, ip, drop_tol, /*classical=*/true);
}

std::pair<BlockVectors, BlockVectors>
biorth_against(const std::vector<const BiorthBasis*>& bases, const BlockVectors& x,
               const BlockVectors& y, const InnerProduct& ip) {
    if (x.dim() != y.dim())
        throw ContractViolation("biorth_against: X and Y dimension mismatch");
    BlockVectors w = x;
    BlockVectors z = y;
    for (const BiorthBasis* b : bases) {
        if (b == nullptr || b->p.empty()) continue;
        if (b->p.dim() != x.dim())
            throw ContractViolation("biorth_against: basis dimension mismatch");
        DenseMatrix cw = block_inner(ip, b->q, w);
        block_axpy(b->p, cw, w);
        DenseMatrix cz = block_inner(ip, b->p, z);
        block_axpy(b->q, cz, z);
    }
    return {std::move(w), std::move(z)};
}

double biorth_residual(const BlockVectors& p, const BlockVectors& q,
                       const InnerProduct& ip) {
    if (p.dim() != q.dim() || p.cols() != q.cols())
        throw ContractViolation("biorth_residual: shape mismatch");
    if (p.cols() == 0) return 0.0;
    DenseMatrix g = block_inner(ip, p, q);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    return spectral_norm(g);
}

} // namespace bosp
