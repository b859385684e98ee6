#pragma once

#include <utility>
#include <vector>

#include "bosp/core/block_vectors.hpp"
#include "bosp/core/inner_product.hpp"

namespace bosp {

/// Paired blocks maintained with P^T Q = I under the active inner product.
struct BiorthBasis {
    BlockVectors p;
    BlockVectors q;
    InnerProduct ip;
};

struct BiorthOutcome {
    BiorthBasis basis;
    std::vector<std::size_t> kept_columns;
    std::vector<std::size_t> dropped_columns;
};

/// Modified Gram-Schmidt biorthogonalization. Column l is processed by
/// sequentially subtracting projections computed from the current partial
/// residuals; the pair is then scaled by eta = p~^T q~ so that p_l^T q_l = 1.
/// Columns whose |eta| falls below drop_tol * ||p~|| * ||q~|| (or with a zero
/// residual) are discarded and the iteration continues.
BiorthOutcome mgs_biorth(const BlockVectors& x, const BlockVectors& y,
                         const InnerProduct& ip, double drop_tol = 1e-12);

/// Classical variant: projection coefficients use the original x, y columns.
BiorthOutcome cgs_biorth(const BlockVectors& x, const BlockVectors& y,
                         const InnerProduct& ip, double drop_tol = 1e-12);

/// Blocked projection of (X, Y) into the biorthogonal complement of the
/// given bases: returns (I - sum P_k Q_k^T) X and (I - sum Q_k P_k^T) Y.
std::pair<BlockVectors, BlockVectors>
biorth_against(const std::vector<const BiorthBasis*>& bases, const BlockVectors& x,
               const BlockVectors& y, const InnerProduct& ip);

/// Spectral norm of P^T Q - I, the biorthogonality loss measure.
double biorth_residual(const BlockVectors& p, const BlockVectors& q,
                       const InnerProduct& ip);

} // namespace bosp
