#include "bosp/core/kernels.hpp"

#include <cmath>

#include "bosp/core/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bosp {

namespace {
int g_threads = 1;
} // namespace

void set_kernel_threads(int nthreads) {
#ifdef _OPENMP
    if (nthreads <= 0) nthreads = omp_get_num_procs();
    g_threads = nthreads;
#else
    (void)nthreads;
    g_threads = 1;
#endif
}

int kernel_threads() { return g_threads; }

double vdot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double vnorm2(std::span<const double> x) { return std::sqrt(vdot(x, x)); }

void vaxpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void vscale(double alpha, std::span<double> x) {
    for (double& v : x) v *= alpha;
}

DenseMatrix block_inner(const InnerProduct& ip, const BlockVectors& x,
                        const BlockVectors& y) {
    if (x.dim() != y.dim())
        throw ContractViolation("block_inner: dimension mismatch");
    const BlockVectors* rhs = &y;
    BlockVectors weighted;
    if (ip.weighted()) {
        weighted = ip.apply_weight(y);
        rhs = &weighted;
    }
    DenseMatrix g(x.cols(), y.cols());
    const std::int64_t ycols = static_cast<std::int64_t>(y.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(g_threads) if (g_threads > 1 && ycols > 8)
#endif
    for (std::int64_t j = 0; j < ycols; ++j) {
        auto yj = rhs->col(static_cast<std::size_t>(j));
        for (std::size_t i = 0; i < x.cols(); ++i)
            g(i, static_cast<std::size_t>(j)) = vdot(x.col(i), yj);
    }
    return g;
}

BlockVectors block_product(const BlockVectors& x, const DenseMatrix& c) {
    if (x.cols() != c.rows())
        throw ContractViolation("block_product: shape mismatch");
    BlockVectors out(x.dim(), c.cols());
    const std::int64_t ccols = static_cast<std::int64_t>(c.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(g_threads) if (g_threads > 1 && ccols > 8)
#endif
    for (std::int64_t j = 0; j < ccols; ++j) {
        auto oj = out.col(static_cast<std::size_t>(j));
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const double ckj = c(k, static_cast<std::size_t>(j));
            if (ckj == 0.0) continue;
            vaxpy(ckj, x.col(k), oj);
        }
    }
    return out;
}

void block_axpy(const BlockVectors& x, const DenseMatrix& c, BlockVectors& y) {
    if (x.cols() != c.rows() || c.cols() != y.cols() || x.dim() != y.dim())
        throw ContractViolation("block_axpy: shape mismatch");
    const std::int64_t ycols = static_cast<std::int64_t>(y.cols());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(g_threads) if (g_threads > 1 && ycols > 8)
#endif
    for (std::int64_t j = 0; j < ycols; ++j) {
        auto yj = y.col(static_cast<std::size_t>(j));
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const double ckj = c(k, static_cast<std::size_t>(j));
            if (ckj == 0.0) continue;
            vaxpy(-ckj, x.col(k), yj);
        }
    }
}

} // namespace bosp
