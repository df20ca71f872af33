// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

#include <psl/core/dense_vector.hpp>
#include <psl/core/executor.hpp>
#include <psl/core/operation.hpp>


namespace psl {


/**
 * Returns sum_i x_i * y_i.
 *
 * The reference executor sums strictly left to right. The parallel executor
 * sums fixed-size chunks independently and then combines the chunk partials
 * in chunk order, so its result is reproducible from run to run.
 */
template <Scalar T>
T dot(const DenseVector<T>& x, const DenseVector<T>& y, const Executor& exec);

/// Returns alpha * x + y as a new vector.
template <Scalar T>
DenseVector<T> axpy(T alpha, const DenseVector<T>& x, const DenseVector<T>& y,
                    const Executor& exec);

template <Scalar T>
T norm2(const DenseVector<T>& x, const Executor& exec);

/// y += alpha * x
template <Scalar T>
void add_scaled(T alpha, const DenseVector<T>& x, DenseVector<T>& y,
                const Executor& exec);

/// y = alpha * x + beta * y
template <Scalar T>
void axpby(T alpha, const DenseVector<T>& x, T beta, DenseVector<T>& y,
           const Executor& exec);

/// x *= alpha
template <Scalar T>
void scale(T alpha, DenseVector<T>& x, const Executor& exec);

template <Scalar T>
void copy(const DenseVector<T>& x, DenseVector<T>& y, const Executor& exec);


/// Chunk length of the parallel reductions.
inline constexpr size_type reduction_chunk = 1024;


namespace ops {


template <Scalar T>
using dot_op = Operation<T(std::span<const T>, std::span<const T>)>;

template <Scalar T>
using add_scaled_op = Operation<void(T, std::span<const T>, std::span<T>)>;

template <Scalar T>
using axpby_op = Operation<void(T, std::span<const T>, T, std::span<T>)>;

template <Scalar T>
using scale_op = Operation<void(T, std::span<T>)>;

template <Scalar T>
using copy_op = Operation<void(std::span<const T>, std::span<T>)>;


template <Scalar T>
const dot_op<T>& dot();

template <Scalar T>
const add_scaled_op<T>& add_scaled();

template <Scalar T>
const axpby_op<T>& axpby();

template <Scalar T>
const scale_op<T>& scale();

template <Scalar T>
const copy_op<T>& copy();


}  // namespace ops
}  // namespace psl
