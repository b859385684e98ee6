#include "bosp/core/linear_operator.hpp"

#include <cstring>
#include <memory>
#include <utility>

#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"

namespace bosp {

LinearOperator LinearOperator::from_dense(DenseMatrix a) {
    if (a.rows() != a.cols())
        throw ContractViolation("LinearOperator: dense operator must be square");
    auto mat = std::make_shared<DenseMatrix>(std::move(a));
    const std::size_t n = mat->rows();
    return LinearOperator(n, Kind::dense, [mat, n](const BlockVectors& x, BlockVectors& y) {
        // accumulate columnwise so every access is unit stride
        for (std::size_t j = 0; j < x.cols(); ++j) {
            auto xj = x.col(j);
            auto yj = y.col(j);
            for (std::size_t i = 0; i < n; ++i) yj[i] = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double xk = xj[k];
                if (xk == 0.0) continue;
                const double* ak = mat->col(k);
                for (std::size_t i = 0; i < n; ++i) yj[i] += ak[i] * xk;
            }
        }
    });
}

LinearOperator LinearOperator::from_csr(SparseMatrixCSR a) {
    a.check_invariants();
    if (a.rows != a.cols)
        throw ContractViolation("LinearOperator: csr operator must be square");
    auto mat = std::make_shared<SparseMatrixCSR>(std::move(a));
    return LinearOperator(mat->rows, Kind::sparse_csr,
                          [mat](const BlockVectors& x, BlockVectors& y) {
                              for (std::size_t j = 0; j < x.cols(); ++j)
                                  mat->apply(x.col(j), y.col(j));
                          });
}

LinearOperator LinearOperator::from_callback(std::size_t dim, ApplyFn fn) {
    return LinearOperator(dim, Kind::matrix_free_callback, std::move(fn));
}

LinearOperator LinearOperator::identity(std::size_t dim) {
    return LinearOperator(dim, Kind::matrix_free_callback,
                          [](const BlockVectors& x, BlockVectors& y) {
                              std::memcpy(y.data(), x.data(),
                                          x.dim() * x.cols() * sizeof(double));
                          });
}

LinearOperator LinearOperator::scaled_identity(std::size_t dim, double alpha) {
    return LinearOperator(dim, Kind::matrix_free_callback,
                          [alpha](const BlockVectors& x, BlockVectors& y) {
                              const double* src = x.data();
                              double* dst = y.data();
                              const std::size_t total = x.dim() * x.cols();
                              for (std::size_t i = 0; i < total; ++i) dst[i] = alpha * src[i];
                          });
}

LinearOperator LinearOperator::diagonal(std::vector<double> d) {
    auto diag = std::make_shared<std::vector<double>>(std::move(d));
    const std::size_t n = diag->size();
    return LinearOperator(n, Kind::matrix_free_callback,
                          [diag, n](const BlockVectors& x, BlockVectors& y) {
                              for (std::size_t j = 0; j < x.cols(); ++j) {
                                  auto xj = x.col(j);
                                  auto yj = y.col(j);
                                  for (std::size_t i = 0; i < n; ++i)
                                      yj[i] = (*diag)[i] * xj[i];
                              }
                          });
}

LinearOperator LinearOperator::shifted(const LinearOperator& a, double sigma) {
    auto base = std::make_shared<LinearOperator>(a);
    return LinearOperator(a.dim(), Kind::matrix_free_callback,
                          [base, sigma](const BlockVectors& x, BlockVectors& y) {
                              base->apply(x, y);
                              const double* src = x.data();
                              double* dst = y.data();
                              const std::size_t total = x.dim() * x.cols();
                              for (std::size_t i = 0; i < total; ++i)
                                  dst[i] += sigma * src[i];
                          });
}

void LinearOperator::apply(const BlockVectors& x, BlockVectors& out) const {
    if (x.dim() != dim_)
        throw ContractViolation("LinearOperator::apply: dimension mismatch");
    if (out.dim() != dim_ || out.cols() != x.cols())
        throw ContractViolation("LinearOperator::apply: output shape mismatch");
    fn_(x, out);
}

BlockVectors LinearOperator::apply(const BlockVectors& x) const {
    BlockVectors out(dim_, x.cols());
    apply(x, out);
    return out;
}

BlockVectors block_apply(const LinearOperator& op, const BlockVectors& x) {
    return op.apply(x);
}

} // namespace bosp
