#pragma once

#include <string>

#include "bosp/core/sparse_csr.hpp"

namespace bosp {

/// Reads a Matrix Market coordinate file (real, general or symmetric).
/// Symmetric files are expanded to full storage and duplicates are summed.
/// Throws IngestionError naming the offending line on malformed input.
SparseMatrixCSR read_matrix_market(const std::string& path);

} // namespace bosp
