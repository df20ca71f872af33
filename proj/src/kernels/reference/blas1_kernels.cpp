// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/blas1_kernels.hpp"


namespace psl::kernels::reference {


template <Scalar T>
T dot(const Executor&, std::span<const T> x, std::span<const T> y)
{
    T sum{};
    for (size_type i = 0; i < x.size(); ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}


template <Scalar T>
void add_scaled(const Executor&, T alpha, std::span<const T> x,
                std::span<T> y)
{
    for (size_type i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}


template <Scalar T>
void axpby(const Executor&, T alpha, std::span<const T> x, T beta,
           std::span<T> y)
{
    for (size_type i = 0; i < x.size(); ++i) {
        y[i] = alpha * x[i] + beta * y[i];
    }
}


template <Scalar T>
void scale(const Executor&, T alpha, std::span<T> x)
{
    for (auto& v : x) {
        v *= alpha;
    }
}


template <Scalar T>
void copy(const Executor&, std::span<const T> x, std::span<T> y)
{
    for (size_type i = 0; i < x.size(); ++i) {
        y[i] = x[i];
    }
}


#define PSL_INSTANTIATE(T)                                                  \
    template T dot<T>(const Executor&, std::span<const T>,                  \
                      std::span<const T>);                                  \
    template void add_scaled<T>(const Executor&, T, std::span<const T>,     \
                                std::span<T>);                              \
    template void axpby<T>(const Executor&, T, std::span<const T>, T,       \
                           std::span<T>);                                   \
    template void scale<T>(const Executor&, T, std::span<T>);               \
    template void copy<T>(const Executor&, std::span<const T>, std::span<T>)

PSL_INSTANTIATE(float);
PSL_INSTANTIATE(double);

#undef PSL_INSTANTIATE


}  // namespace psl::kernels::reference
