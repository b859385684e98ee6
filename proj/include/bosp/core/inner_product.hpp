#pragma once

#include <memory>
#include <optional>

#include "bosp/core/linear_operator.hpp"

namespace bosp {

/// Euclidean inner product, optionally weighted by an SPD operator B:
/// <x, y> = x^T B y. The identity weight is represented by absence.
class InnerProduct {
public:
    InnerProduct() = default;
    explicit InnerProduct(LinearOperator weight)
        : weight_(std::make_shared<LinearOperator>(std::move(weight))) {}

    bool weighted() const { return weight_ != nullptr; }
    const LinearOperator* weight() const { return weight_.get(); }

    /// B*y (or a copy of y for the identity weight).
    BlockVectors apply_weight(const BlockVectors& y) const;

    double dot(std::span<const double> x, std::span<const double> y) const;
    double norm(std::span<const double> x) const;

private:
    std::shared_ptr<const LinearOperator> weight_;
};

} // namespace bosp
