#include "bosp/projected/dense_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bosp/core/errors.hpp"

namespace bosp {

std::optional<DenseMatrix> cholesky_lower(const DenseMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const std::size_t n = a.rows();
    DenseMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

JacobiSvdResult jacobi_svd(DenseMatrix a, std::size_t max_sweeps) {
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    if (m < k) throw ContractViolation("jacobi_svd: requires rows >= cols");

    JacobiSvdResult res;
    res.v = DenseMatrix::identity(k);
    const double conv_tol = 1e-15;

    bool rotated = true;
    std::size_t sweep = 0;
    while (rotated && sweep < max_sweeps) {
        rotated = false;
        ++sweep;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                double* ap = a.col(p);
                double* aq = a.col(q);
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += ap[i] * ap[i];
                    beta += aq[i] * aq[i];
                    gamma += ap[i] * aq[i];
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::fabs(gamma) <= conv_tol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = ((zeta >= 0.0) ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (std::size_t i = 0; i < m; ++i) {
                    const double vp = ap[i];
                    const double vq = aq[i];
                    ap[i] = c * vp - s * vq;
                    aq[i] = s * vp + c * vq;
                }
                double* vp_col = res.v.col(p);
                double* vq_col = res.v.col(q);
                for (std::size_t i = 0; i < k; ++i) {
                    const double vp = vp_col[i];
                    const double vq = vq_col[i];
                    vp_col[i] = c * vp - s * vq;
                    vq_col[i] = s * vp + c * vq;
                }
            }
        }
    }
    res.converged = !rotated;
    res.sweeps = sweep;

    std::vector<double> sig(k);
    for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        const double* aj = a.col(j);
        for (std::size_t i = 0; i < m; ++i) s += aj[i] * aj[i];
        sig[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sig[i] < sig[j]; });

    res.u = DenseMatrix(m, k);
    res.sigma.resize(k);
    DenseMatrix v_sorted(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = order[j];
        res.sigma[j] = sig[src];
        const double inv = (sig[src] > 0.0) ? 1.0 / sig[src] : 0.0;
        const double* aj = a.col(src);
        double* uj = res.u.col(j);
        for (std::size_t i = 0; i < m; ++i) uj[i] = aj[i] * inv;
        const double* vj = res.v.col(src);
        double* vo = v_sorted.col(j);
        for (std::size_t i = 0; i < k; ++i) vo[i] = vj[i];
    }
    res.v = std::move(v_sorted);
    return res;
}

double spectral_norm(const DenseMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    if (a.rows() >= a.cols()) {
        auto svd = jacobi_svd(a);
        return svd.sigma.back();
    }
    auto svd = jacobi_svd(a.transposed());
    return svd.sigma.back();
}

double condition_number_2(const DenseMatrix& a) {
    auto svd = (a.rows() >= a.cols()) ? jacobi_svd(a) : jacobi_svd(a.transposed());
    const double smin = svd.sigma.front();
    const double smax = svd.sigma.back();
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

LuFactors lu_factor(DenseMatrix a) {
    if (a.rows() != a.cols()) throw ContractViolation("lu_factor: matrix not square");
    const std::size_t n = a.rows();
    LuFactors f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    for (std::size_t kcol = 0; kcol < n; ++kcol) {
        std::size_t piv = kcol;
        double best = std::fabs(a(kcol, kcol));
        for (std::size_t i = kcol + 1; i < n; ++i) {
            const double v = std::fabs(a(i, kcol));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) throw ContractViolation("lu_factor: singular matrix");
        if (piv != kcol) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(kcol, j), a(piv, j));
            std::swap(f.perm[kcol], f.perm[piv]);
        }
        const double pivot = a(kcol, kcol);
        for (std::size_t i = kcol + 1; i < n; ++i) {
            const double lik = a(i, kcol) / pivot;
            a(i, kcol) = lik;
            for (std::size_t j = kcol + 1; j < n; ++j) a(i, j) -= lik * a(kcol, j);
        }
    }
    f.lu = std::move(a);
    return f;
}

std::vector<double> lu_solve(const LuFactors& f, std::vector<double> b) {
    const std::size_t n = f.perm.size();
    if (b.size() != n) throw ContractViolation("lu_solve: rhs dimension mismatch");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x[j];
        x[ii] = s / f.lu(ii, ii);
    }
    return x;
}

DenseMatrix lu_solve(const LuFactors& f, const DenseMatrix& b) {
    DenseMatrix x(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<double> col(b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        auto sol = lu_solve(f, std::move(col));
        for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = sol[i];
    }
    return x;
}

DenseMatrix lu_inverse(const DenseMatrix& a) {
    auto f = lu_factor(a);
    return lu_solve(f, DenseMatrix::identity(a.rows()));
}

DenseMatrix transpose_times(const DenseMatrix& l, const DenseMatrix& r) {
    return matmul_tn(l, r);
}

} // namespace bosp
