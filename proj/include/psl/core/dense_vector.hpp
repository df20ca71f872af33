// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <psl/core/types.hpp>


namespace psl {


/// Contiguous vector operand of SpMV and the solvers.
template <Scalar T>
class DenseVector {
public:
    using value_type = T;

    static constexpr Precision precision = precision_of<T>;

    DenseVector() = default;

    explicit DenseVector(size_type len, T fill = T{}) : values_(len, fill) {}

    DenseVector(std::initializer_list<T> values) : values_(values) {}

    explicit DenseVector(std::vector<T> values) : values_(std::move(values))
    {}

    size_type size() const noexcept { return values_.size(); }

    bool empty() const noexcept { return values_.empty(); }

    T* data() noexcept { return values_.data(); }

    const T* data() const noexcept { return values_.data(); }

    std::span<T> values() noexcept { return values_; }

    std::span<const T> values() const noexcept { return values_; }

    T& operator[](size_type i) noexcept { return values_[i]; }

    const T& operator[](size_type i) const noexcept { return values_[i]; }

    auto begin() noexcept { return values_.begin(); }
    auto end() noexcept { return values_.end(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const DenseVector&, const DenseVector&) = default;

private:
    std::vector<T> values_;
};


}  // namespace psl
