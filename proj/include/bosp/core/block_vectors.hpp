#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace bosp {

/// An n x m block of column vectors, stored column-major so that each
/// column is a contiguous slice. This is the unit of all solver arithmetic.
class BlockVectors {
public:
    BlockVectors() = default;
    BlockVectors(std::size_t dim, std::size_t ncols)
        : dim_(dim), ncols_(ncols), data_(dim * ncols, 0.0) {}

    std::size_t dim() const { return dim_; }
    std::size_t cols() const { return ncols_; }
    bool empty() const { return ncols_ == 0; }

    /// Contiguous view of column j; mutations are visible in the block.
    std::span<double> col(std::size_t j) { return {data_.data() + j * dim_, dim_}; }
    std::span<const double> col(std::size_t j) const { return {data_.data() + j * dim_, dim_}; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i + j * dim_]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i + j * dim_]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    /// Copy of columns [first, first+count).
    BlockVectors columns(std::size_t first, std::size_t count) const;

    /// Overwrites columns [first, first+src.cols()) with src.
    void assign_columns(std::size_t first, const BlockVectors& src);

    void fill_zero();

    /// i.i.d. uniform on [-1, 1], filled column by column.
    void fill_uniform(std::mt19937_64& rng);

    /// Horizontal concatenation; empty blocks are skipped.
    static BlockVectors hcat(const std::vector<const BlockVectors*>& parts);

private:
    std::size_t dim_ = 0;
    std::size_t ncols_ = 0;
    std::vector<double> data_;
};

} // namespace bosp
