#pragma once

#include <functional>
#include <memory>

#include "bosp/core/block_vectors.hpp"
#include "bosp/core/dense_matrix.hpp"
#include "bosp/core/sparse_csr.hpp"

namespace bosp {

/// Apply-only linear map of a fixed dimension. The solver touches K, M and B
/// exclusively through this interface, so callers may supply a bare callback
/// and never materialize a matrix.
class LinearOperator {
public:
    enum class Kind { dense, sparse_csr, matrix_free_callback };

    using ApplyFn = std::function<void(const BlockVectors&, BlockVectors&)>;

    LinearOperator() = default;

    static LinearOperator from_dense(DenseMatrix a);
    static LinearOperator from_csr(SparseMatrixCSR a);
    static LinearOperator from_callback(std::size_t dim, ApplyFn fn);
    static LinearOperator identity(std::size_t dim);
    static LinearOperator scaled_identity(std::size_t dim, double alpha);
    static LinearOperator diagonal(std::vector<double> d);
    /// A + sigma*I on top of an existing operator.
    static LinearOperator shifted(const LinearOperator& a, double sigma);

    std::size_t dim() const { return dim_; }
    Kind kind() const { return kind_; }

    /// out = A * x, column by column. Shapes must conform.
    void apply(const BlockVectors& x, BlockVectors& out) const;
    BlockVectors apply(const BlockVectors& x) const;

    bool valid() const { return dim_ > 0; }

private:
    LinearOperator(std::size_t dim, Kind kind, ApplyFn fn)
        : dim_(dim), kind_(kind), fn_(std::move(fn)) {}

    std::size_t dim_ = 0;
    Kind kind_ = Kind::matrix_free_callback;
    ApplyFn fn_;
};

/// Column j of the result is op applied to column j of X.
BlockVectors block_apply(const LinearOperator& op, const BlockVectors& x);

} // namespace bosp
