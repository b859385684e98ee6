#pragma once

#include <cstddef>
#include <vector>

#include "bosp/core/block_vectors.hpp"

namespace bosp {

/// Compressed sparse row matrix.
/// row_offsets is nondecreasing with rows+1 entries; column indices are
/// strictly increasing within each row.
struct SparseMatrixCSR {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> row_offsets;
    std::vector<std::size_t> col_indices;
    std::vector<double> values;

    std::size_t nnz() const { return values.size(); }

    /// Validates the structural invariants, throwing ContractViolation.
    void check_invariants() const;

    /// y = A * x for a single column.
    void apply(std::span<const double> x, std::span<double> y) const;
};

/// Builds CSR from unsorted triplets; duplicate entries are summed.
SparseMatrixCSR csr_from_triplets(std::size_t rows, std::size_t cols,
                                  std::vector<std::size_t> ti,
                                  std::vector<std::size_t> tj,
                                  std::vector<double> tv);

} // namespace bosp
