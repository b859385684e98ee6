#pragma once

#include <span>

#include "bosp/core/block_vectors.hpp"
#include "bosp/core/dense_matrix.hpp"
#include "bosp/core/inner_product.hpp"

namespace bosp {

// Vector-level helpers (unit stride).
double vdot(std::span<const double> x, std::span<const double> y);
double vnorm2(std::span<const double> x);
void vaxpy(double alpha, std::span<const double> x, std::span<double> y);
void vscale(double alpha, std::span<double> x);

/// Sets the column-parallel kernel thread budget. 0 means auto (hardware).
/// Reads of BOSP_THREADS happen once in the CLI; the library default is 1.
void set_kernel_threads(int nthreads);
int kernel_threads();

/// result[i][j] = <column i of X, column j of Y> under ip.
DenseMatrix block_inner(const InnerProduct& ip, const BlockVectors& x,
                        const BlockVectors& y);

/// X * C.
BlockVectors block_product(const BlockVectors& x, const DenseMatrix& c);

/// Y <- Y - X * C, accumulated in real64.
void block_axpy(const BlockVectors& x, const DenseMatrix& c, BlockVectors& y);

} // namespace bosp
