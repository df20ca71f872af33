// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include <psl/core/executor.hpp>
#include <psl/formats/coo.hpp>
#include <psl/formats/csr.hpp>


#define PSL_DECLARE_SPMV_KERNELS                                            \
    template <Scalar T>                                                     \
    void spmv_csr(const Executor& exec, const CsrMatrix<T>& m,              \
                  std::span<const T> x, std::span<T> y, T alpha, T beta);   \
    template <Scalar T>                                                     \
    void spmv_coo(const Executor& exec, const CooMatrix<T>& m,              \
                  std::span<const T> x, std::span<T> y, T alpha, T beta)


namespace psl::kernels {
namespace reference {
PSL_DECLARE_SPMV_KERNELS;
}  // namespace reference
namespace omp {
PSL_DECLARE_SPMV_KERNELS;
}  // namespace omp
}  // namespace psl::kernels

#undef PSL_DECLARE_SPMV_KERNELS
