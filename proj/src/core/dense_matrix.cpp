#include "bosp/core/dense_matrix.hpp"

#include <cmath>

#include "bosp/core/errors.hpp"

namespace bosp {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
    return a;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& d) {
    DenseMatrix a(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) a(i, i) = d[i];
    return a;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::symmetrized() const {
    if (rows_ != cols_)
        throw ContractViolation("symmetrized: matrix is not square");
    DenseMatrix s(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return s;
}

void DenseMatrix::mirror_lower() {
    if (rows_ != cols_)
        throw ContractViolation("mirror_lower: matrix is not square");
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = j + 1; i < rows_; ++i) (*this)(j, i) = (*this)(i, j);
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol_rel) const {
    if (rows_ != cols_) return false;
    const double scale = max_abs();
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = j + 1; i < rows_; ++i)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol_rel * scale) return false;
    return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw ContractViolation("matmul: inner dimensions disagree");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        double* cj = c.col(j);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            const double* ak = a.col(k);
            for (std::size_t i = 0; i < a.rows(); ++i) cj[i] += ak[i] * bkj;
        }
    }
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows())
        throw ContractViolation("matmul_tn: row dimensions disagree");
    DenseMatrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const double* bj = b.col(j);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double* ai = a.col(i);
            double s = 0.0;
            for (std::size_t k = 0; k < a.rows(); ++k) s += ai[k] * bj[k];
            c(i, j) = s;
        }
    }
    return c;
}

} // namespace bosp
