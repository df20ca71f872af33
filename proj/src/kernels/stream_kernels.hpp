// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include <psl/core/executor.hpp>
#include <psl/core/types.hpp>


#define PSL_DECLARE_STREAM_KERNELS                                           \
    template <Scalar T>                                                      \
    void fill(const Executor& exec, T value, std::span<T> x);                \
    template <Scalar T>                                                      \
    void mul(const Executor& exec, T scalar, std::span<const T> c,           \
             std::span<T> b);                                                \
    template <Scalar T>                                                      \
    void add(const Executor& exec, std::span<const T> a,                     \
             std::span<const T> b, std::span<T> c);                          \
    template <Scalar T>                                                      \
    void triad(const Executor& exec, T scalar, std::span<const T> b,         \
               std::span<const T> c, std::span<T> a);                        \
    /* independent multiply-add chains; returns the flops performed */       \
    template <Scalar T>                                                      \
    std::uint64_t fma_chains(const Executor& exec, std::uint64_t steps,      \
                             T& checksum)


namespace psl::kernels {
namespace reference {
PSL_DECLARE_STREAM_KERNELS;
}  // namespace reference
namespace omp {
PSL_DECLARE_STREAM_KERNELS;
}  // namespace omp

/// multiply-add chains each thread keeps in flight
inline constexpr int fma_chain_width = 32;

}  // namespace psl::kernels

#undef PSL_DECLARE_STREAM_KERNELS
