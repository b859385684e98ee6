#pragma once

#include <cstddef>
#include <vector>

namespace bosp {

/// Column-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double* col(std::size_t j) { return data_.data() + j * rows_; }
    const double* col(std::size_t j) const { return data_.data() + j * rows_; }

    DenseMatrix transposed() const;

    /// (A + A^T)/2 for square matrices.
    DenseMatrix symmetrized() const;

    /// Copies the lower triangle onto the upper one, making the matrix
    /// symmetric bit-exactly.
    void mirror_lower();

    /// max_ij |a_ij|
    double max_abs() const;

    /// Frobenius norm.
    double frobenius_norm() const;

    bool is_symmetric(double tol_rel) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// C = A * B
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
/// C = A^T * B
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);

} // namespace bosp
