#include "bosp/core/sparse_csr.hpp"

#include <algorithm>
#include <numeric>

#include "bosp/core/errors.hpp"

namespace bosp {

void SparseMatrixCSR::check_invariants() const {
    if (row_offsets.size() != rows + 1)
        throw ContractViolation("csr: row_offsets length must be rows+1");
    if (row_offsets.front() != 0 || row_offsets.back() != values.size())
        throw ContractViolation("csr: row_offsets endpoints invalid");
    for (std::size_t r = 0; r < rows; ++r) {
        if (row_offsets[r] > row_offsets[r + 1])
            throw ContractViolation("csr: row_offsets must be nondecreasing");
        for (std::size_t k = row_offsets[r]; k + 1 < row_offsets[r + 1]; ++k)
            if (col_indices[k] >= col_indices[k + 1])
                throw ContractViolation("csr: column indices not strictly increasing");
        for (std::size_t k = row_offsets[r]; k < row_offsets[r + 1]; ++k)
            if (col_indices[k] >= cols)
                throw ContractViolation("csr: column index out of range");
    }
    if (col_indices.size() != values.size())
        throw ContractViolation("csr: col_indices/values length mismatch");
}

void SparseMatrixCSR::apply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t r = 0; r < rows; ++r) {
        double s = 0.0;
        for (std::size_t k = row_offsets[r]; k < row_offsets[r + 1]; ++k)
            s += values[k] * x[col_indices[k]];
        y[r] = s;
    }
}

SparseMatrixCSR csr_from_triplets(std::size_t rows, std::size_t cols,
                                  std::vector<std::size_t> ti,
                                  std::vector<std::size_t> tj,
                                  std::vector<double> tv) {
    const std::size_t nt = tv.size();
    if (ti.size() != nt || tj.size() != nt)
        throw ContractViolation("csr_from_triplets: triplet arrays disagree");

    std::vector<std::size_t> order(nt);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (ti[a] != ti[b]) return ti[a] < ti[b];
        return tj[a] < tj[b];
    });

    SparseMatrixCSR m;
    m.rows = rows;
    m.cols = cols;
    m.row_offsets.assign(rows + 1, 0);

    std::size_t k = 0;
    while (k < nt) {
        const std::size_t r = ti[order[k]];
        const std::size_t c = tj[order[k]];
        if (r >= rows || c >= cols)
            throw ContractViolation("csr_from_triplets: entry out of range");
        double v = 0.0;
        // duplicate entries are summed
        while (k < nt && ti[order[k]] == r && tj[order[k]] == c) {
            v += tv[order[k]];
            ++k;
        }
        m.col_indices.push_back(c);
        m.values.push_back(v);
        m.row_offsets[r + 1] = m.values.size();
    }
    for (std::size_t r = 1; r <= rows; ++r)
        m.row_offsets[r] = std::max(m.row_offsets[r], m.row_offsets[r - 1]);

    m.check_invariants();
    return m;
}

} // namespace bosp
