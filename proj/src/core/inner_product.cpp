#include "bosp/core/inner_product.hpp"

#include <cmath>
#include <cstring>

#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"

namespace bosp {

BlockVectors InnerProduct::apply_weight(const BlockVectors& y) const {
    if (!weight_) {
        BlockVectors copy(y.dim(), y.cols());
        std::memcpy(copy.data(), y.data(), y.dim() * y.cols() * sizeof(double));
        return copy;
    }
    return weight_->apply(y);
}

double InnerProduct::dot(std::span<const double> x, std::span<const double> y) const {
    if (x.size() != y.size())
        throw ContractViolation("InnerProduct::dot: dimension mismatch");
    if (!weight_) return vdot(x, y);
    BlockVectors tmp(y.size(), 1);
    std::memcpy(tmp.data(), y.data(), y.size() * sizeof(double));
    BlockVectors by = weight_->apply(tmp);
    return vdot(x, by.col(0));
}

double InnerProduct::norm(std::span<const double> x) const {
    return std::sqrt(std::max(0.0, dot(x, x)));
}

} // namespace bosp
