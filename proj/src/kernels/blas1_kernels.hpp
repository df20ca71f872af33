// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include <psl/core/executor.hpp>
#include <psl/core/types.hpp>


#define PSL_DECLARE_BLAS1_KERNELS                                          \
    template <Scalar T>                                                    \
    T dot(const Executor& exec, std::span<const T> x, std::span<const T> y); \
    template <Scalar T>                                                    \
    void add_scaled(const Executor& exec, T alpha, std::span<const T> x,   \
                    std::span<T> y);                                       \
    template <Scalar T>                                                    \
    void axpby(const Executor& exec, T alpha, std::span<const T> x, T beta, \
               std::span<T> y);                                            \
    template <Scalar T>                                                    \
    void scale(const Executor& exec, T alpha, std::span<T> x);             \
    template <Scalar T>                                                    \
    void copy(const Executor& exec, std::span<const T> x, std::span<T> y)


namespace psl::kernels {
namespace reference {
PSL_DECLARE_BLAS1_KERNELS;
}  // namespace reference
namespace omp {
PSL_DECLARE_BLAS1_KERNELS;
}  // namespace omp
}  // namespace psl::kernels

#undef PSL_DECLARE_BLAS1_KERNELS
