#include "bosp/core/block_vectors.hpp"

#include <algorithm>
#include <cstring>

#include "bosp/core/errors.hpp"

namespace bosp {

BlockVectors BlockVectors::columns(std::size_t first, std::size_t count) const {
    if (first + count > ncols_)
        throw ContractViolation("columns: range exceeds block width");
    BlockVectors out(dim_, count);
    std::memcpy(out.data(), data_.data() + first * dim_, count * dim_ * sizeof(double));
    return out;
}

void BlockVectors::assign_columns(std::size_t first, const BlockVectors& src) {
    if (src.dim() != dim_ || first + src.cols() > ncols_)
        throw ContractViolation("assign_columns: shape mismatch");
    std::memcpy(data_.data() + first * dim_, src.data(),
                src.cols() * dim_ * sizeof(double));
}

void BlockVectors::fill_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

void BlockVectors::fill_uniform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : data_) v = dist(rng);
}

BlockVectors BlockVectors::hcat(const std::vector<const BlockVectors*>& parts) {
    std::size_t dim = 0, total = 0;
    for (const BlockVectors* p : parts) {
        if (p == nullptr || p->empty()) continue;
        if (dim == 0) dim = p->dim();
        if (p->dim() != dim) throw ContractViolation("hcat: dimension mismatch");
        total += p->cols();
    }
    BlockVectors out(dim, total);
    std::size_t at = 0;
    for (const BlockVectors* p : parts) {
        if (p == nullptr || p->empty()) continue;
        out.assign_columns(at, *p);
        at += p->cols();
    }
    return out;
}

} // namespace bosp
