// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>

#include <psl/core/dense_vector.hpp>
#include <psl/core/executor.hpp>
#include <psl/core/operation.hpp>
#include <psl/formats/coo.hpp>
#include <psl/formats/csr.hpp>


namespace psl {


/**
 * y = alpha * A * x + beta * y for a CSR matrix.
 *
 * With beta == 0 the previous contents of y are overwritten, never read, so
 * y may be uninitialized (even NaN). Rows without entries yield beta * y_i.
 * The parallel executor splits the rows across threads; each row is summed
 * in storage order by one thread, so results match the reference executor
 * bit for bit.
 *
 * Throws DimensionMismatch when x.size() != num_cols or y.size() != num_rows,
 * InvalidArgument when x and y are the same object.
 */
template <Scalar T>
void spmv_csr(const CsrMatrix<T>& m, const DenseVector<T>& x,
              DenseVector<T>& y, T alpha, T beta, const Executor& exec);

/**
 * y = alpha * A * x + beta * y for a COO matrix.
 *
 * Same contract as spmv_csr. The parallel executor splits the nonzeros into
 * one contiguous segment per thread; rows crossing a segment boundary are
 * reconciled afterwards from per-segment partial sums in segment order.
 */
template <Scalar T>
void spmv_coo(const CooMatrix<T>& m, const DenseVector<T>& x,
              DenseVector<T>& y, T alpha, T beta, const Executor& exec);


template <Scalar T>
void spmv(const CsrMatrix<T>& m, const DenseVector<T>& x, DenseVector<T>& y,
          const Executor& exec, T alpha = T{1}, T beta = T{0})
{
    spmv_csr(m, x, y, alpha, beta, exec);
}

template <Scalar T>
void spmv(const CooMatrix<T>& m, const DenseVector<T>& x, DenseVector<T>& y,
          const Executor& exec, T alpha = T{1}, T beta = T{0})
{
    spmv_coo(m, x, y, alpha, beta, exec);
}

/// Returns A * x as a new vector.
template <typename Matrix>
DenseVector<typename Matrix::value_type> multiply(
    const Matrix& m, const DenseVector<typename Matrix::value_type>& x,
    const Executor& exec)
{
    DenseVector<typename Matrix::value_type> y(m.num_rows());
    spmv(m, x, y, exec);
    return y;
}


/// One multiply and one add per stored entry.
constexpr std::uint64_t spmv_flops(std::uint64_t nnz) noexcept
{
    return 2 * nnz;
}

template <typename Matrix>
    requires requires(const Matrix& m) { m.nnz(); }
constexpr std::uint64_t spmv_flops(const Matrix& m) noexcept
{
    return spmv_flops(static_cast<std::uint64_t>(m.nnz()));
}


namespace ops {


template <Scalar T>
using spmv_csr_op = Operation<void(const CsrMatrix<T>&, std::span<const T>,
                                   std::span<T>, T, T)>;

template <Scalar T>
using spmv_coo_op = Operation<void(const CooMatrix<T>&, std::span<const T>,
                                   std::span<T>, T, T)>;

template <Scalar T>
const spmv_csr_op<T>& spmv_csr();

template <Scalar T>
const spmv_coo_op<T>& spmv_coo();


}  // namespace ops
}  // namespace psl
