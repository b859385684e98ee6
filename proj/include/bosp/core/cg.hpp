#pragma once

#include "bosp/core/linear_operator.hpp"

namespace bosp {

struct CgResult {
    BlockVectors x;
    /// Some column hit p^T A p <= 0; the iterate at that point is returned.
    bool breakdown = false;
    std::size_t max_iterations_used = 0;
};

/// Per-column conjugate gradient on a symmetric operator. Each column
/// iterates until ||A x - b||_2 <= tol * ||b||_2 or max_iter, and the last
/// iterate is returned either way; inexact solves are acceptable.
CgResult cg_solve(const LinearOperator& op, const BlockVectors& rhs,
                  const BlockVectors& x0, double tol, std::size_t max_iter);

} // namespace bosp
