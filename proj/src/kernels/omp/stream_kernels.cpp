// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/stream_kernels.hpp"

#include <array>
#include <vector>

#include <omp.h>


namespace psl::kernels::omp {


template <Scalar T>
void fill(const Executor& exec, T value, std::span<T> x)
{
    const auto n = static_cast<std::int64_t>(x.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        x[i] = value;
    }
}


template <Scalar T>
void mul(const Executor& exec, T scalar, std::span<const T> c, std::span<T> b)
{
    const auto n = static_cast<std::int64_t>(c.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        b[i] = scalar * c[i];
    }
}


template <Scalar T>
void add(const Executor& exec, std::span<const T> a, std::span<const T> b,
         std::span<T> c)
{
    const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        c[i] = a[i] + b[i];
    }
}


template <Scalar T>
void triad(const Executor& exec, T scalar, std::span<const T> b,
           std::span<const T> c, std::span<T> a)
{
    const auto n = static_cast<std::int64_t>(b.size());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        a[i] = b[i] + scalar * c[i];
    }
}


template <Scalar T>
std::uint64_t fma_chains(const Executor& exec, std::uint64_t steps,
                         T& checksum)
{
    const int threads = exec.thread_count();
    std::vector<T> partial(static_cast<size_type>(threads));
#pragma omp parallel num_threads(threads)
    {
        std::array<T, fma_chain_width> acc{};
        for (int k = 0; k < fma_chain_width; ++k) {
            acc[k] = T(k) * T(0.001);
        }
        const T mult = T(0.999999);
        const T shift = T(1e-7);
        for (std::uint64_t s = 0; s < steps; ++s) {
            for (auto& v : acc) {
                v = v * mult + shift;
            }
        }
        T sum{};
        for (const auto v : acc) {
            sum += v;
        }
        partial[omp_get_thread_num()] = sum;
    }
    checksum = T{};
    for (const auto v : partial) {
        checksum += v;
    }
    return 2 * steps * fma_chain_width * static_cast<std::uint64_t>(threads);
}


#define PSL_INSTANTIATE(T)                                                  \
    template void fill<T>(const Executor&, T, std::span<T>);                \
    template void mul<T>(const Executor&, T, std::span<const T>,            \
                         std::span<T>);                                     \
    template void add<T>(const Executor&, std::span<const T>,               \
                         std::span<const T>, std::span<T>);                 \
    template void triad<T>(const Executor&, T, std::span<const T>,          \
                           std::span<const T>, std::span<T>);               \
    template std::uint64_t fma_chains<T>(const Executor&, std::uint64_t, T&)

PSL_INSTANTIATE(float);
PSL_INSTANTIATE(double);

#undef PSL_INSTANTIATE


}  // namespace psl::kernels::omp
