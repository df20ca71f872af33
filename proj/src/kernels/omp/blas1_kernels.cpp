// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/blas1_kernels.hpp"

#include <cstdint>
#include <vector>

#include <psl/core/blas1.hpp>


namespace psl::kernels::omp {


template <Scalar T>
T dot(const Executor& exec, std::span<const T> x, std::span<const T> y)
{
    const auto n = static_cast<std::int64_t>(x.size());
    const auto chunk = static_cast<std::int64_t>(reduction_chunk);
    const auto num_chunks = (n + chunk - 1) / chunk;
    std::vector<T> partial(static_cast<size_type>(num_chunks));

#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t c = 0; c < num_chunks; ++c) {
        const auto begin = c * chunk;
        const auto end = begin + chunk < n ? begin + chunk : n;
        T sum{};
        for (auto i = begin; i < end; ++i) {
            sum += x[i] * y[i];
        }
        partial[c] = sum;
    }

    // chunk order, independent of the thread schedule
    T sum{};
    for (const auto p : partial) {
        sum += p;
    }
    return sum;
}


template <Scalar T>
void add_scaled(const Executor& exec, T alpha, std::span<const T> x,
                std::span<T> y)
{
    const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}


template <Scalar T>
void axpby(const Executor& exec, T alpha, std::span<const T> x, T beta,
           std::span<T> y)
{
    const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        y[i] = alpha * x[i] + beta * y[i];
    }
}


template <Scalar T>
void scale(const Executor& exec, T alpha, std::span<T> x)
{
    const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        x[i] *= alpha;
    }
}


template <Scalar T>
void copy(const Executor& exec, std::span<const T> x, std::span<T> y)
{
    const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
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


}  // namespace psl::kernels::omp
