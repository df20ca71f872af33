// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/stream_kernels.hpp"

#include <array>


namespace psl::kernels::reference {


template <Scalar T>
void fill(const Executor&, T value, std::span<T> x)
{
    for (auto& v : x) {
        v = value;
    }
}


template <Scalar T>
void mul(const Executor&, T scalar, std::span<const T> c, std::span<T> b)
{
    for (size_type i = 0; i < c.size(); ++i) {
        b[i] = scalar * c[i];
    }
}


template <Scalar T>
void add(const Executor&, std::span<const T> a, std::span<const T> b,
         std::span<T> c)
{
    for (size_type i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
    }
}


template <Scalar T>
void triad(const Executor&, T scalar, std::span<const T> b,
           std::span<const T> c, std::span<T> a)
{
    for (size_type i = 0; i < b.size(); ++i) {
        a[i] = b[i] + scalar * c[i];
    }
}


template <Scalar T>
std::uint64_t fma_chains(const Executor&, std::uint64_t steps, T& checksum)
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
    checksum = T{};
    for (const auto v : acc) {
        checksum += v;
    }
    return 2 * steps * fma_chain_width;
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


}  // namespace psl::kernels::reference
