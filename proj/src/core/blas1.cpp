// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/core/blas1.hpp>

#include <cmath>

#include <psl/core/error.hpp>

#include "kernels/blas1_kernels.hpp"


namespace psl {
namespace ops {


template <Scalar T>
const dot_op<T>& dot()
{
    static const auto op =
        dot_op<T>("dot")
            .bind(ExecutorKind::reference, kernels::reference::dot<T>)
            .bind(ExecutorKind::parallel, kernels::omp::dot<T>);
    return op;
}


template <Scalar T>
const add_scaled_op<T>& add_scaled()
{
    static const auto op =
        add_scaled_op<T>("add_scaled")
            .bind(ExecutorKind::reference, kernels::reference::add_scaled<T>)
            .bind(ExecutorKind::parallel, kernels::omp::add_scaled<T>);
    return op;
}


template <Scalar T>
const axpby_op<T>& axpby()
{
    static const auto op =
        axpby_op<T>("axpby")
            .bind(ExecutorKind::reference, kernels::reference::axpby<T>)
            .bind(ExecutorKind::parallel, kernels::omp::axpby<T>);
    return op;
}


template <Scalar T>
const scale_op<T>& scale()
{
    static const auto op =
        scale_op<T>("scale")
            .bind(ExecutorKind::reference, kernels::reference::scale<T>)
            .bind(ExecutorKind::parallel, kernels::omp::scale<T>);
    return op;
}


template <Scalar T>
const copy_op<T>& copy()
{
    static const auto op =
        copy_op<T>("copy")
            .bind(ExecutorKind::reference, kernels::reference::copy<T>)
            .bind(ExecutorKind::parallel, kernels::omp::copy<T>);
    return op;
}


}  // namespace ops


namespace {


template <Scalar T>
void check_same_size(std::string_view where, const DenseVector<T>& x,
                     const DenseVector<T>& y)
{
    if (x.size() != y.size()) {
        throw DimensionMismatch(where, x.size(), y.size());
    }
}


}  // namespace


template <Scalar T>
T dot(const DenseVector<T>& x, const DenseVector<T>& y, const Executor& exec)
{
    check_same_size("dot", x, y);
    return dispatch(ops::dot<T>(), exec, x.values(), y.values());
}


template <Scalar T>
DenseVector<T> axpy(T alpha, const DenseVector<T>& x, const DenseVector<T>& y,
                    const Executor& exec)
{
    check_same_size("axpy", x, y);
    DenseVector<T> result(y.size());
    dispatch(ops::copy<T>(), exec, y.values(), result.values());
    dispatch(ops::add_scaled<T>(), exec, alpha, x.values(), result.values());
    return result;
}


template <Scalar T>
T norm2(const DenseVector<T>& x, const Executor& exec)
{
    return std::sqrt(dispatch(ops::dot<T>(), exec, x.values(), x.values()));
}


template <Scalar T>
void add_scaled(T alpha, const DenseVector<T>& x, DenseVector<T>& y,
                const Executor& exec)
{
    check_same_size("add_scaled", x, y);
    dispatch(ops::add_scaled<T>(), exec, alpha, x.values(), y.values());
}


template <Scalar T>
void axpby(T alpha, const DenseVector<T>& x, T beta, DenseVector<T>& y,
           const Executor& exec)
{
    check_same_size("axpby", x, y);
    dispatch(ops::axpby<T>(), exec, alpha, x.values(), beta, y.values());
}


template <Scalar T>
void scale(T alpha, DenseVector<T>& x, const Executor& exec)
{
    dispatch(ops::scale<T>(), exec, alpha, x.values());
}


template <Scalar T>
void copy(const DenseVector<T>& x, DenseVector<T>& y, const Executor& exec)
{
    check_same_size("copy", x, y);
    dispatch(ops::copy<T>(), exec, x.values(), y.values());
}


#define PSL_INSTANTIATE(T)                                                    \
    template const ops::dot_op<T>& ops::dot<T>();                             \
    template const ops::add_scaled_op<T>& ops::add_scaled<T>();               \
    template const ops::axpby_op<T>& ops::axpby<T>();                         \
    template const ops::scale_op<T>& ops::scale<T>();                         \
    template const ops::copy_op<T>& ops::copy<T>();                           \
    template T dot(const DenseVector<T>&, const DenseVector<T>&,              \
                   const Executor&);                                          \
    template DenseVector<T> axpy(T, const DenseVector<T>&,                    \
                                 const DenseVector<T>&, const Executor&);     \
    template T norm2(const DenseVector<T>&, const Executor&);                 \
    template void add_scaled(T, const DenseVector<T>&, DenseVector<T>&,       \
                             const Executor&);                                \
    template void axpby(T, const DenseVector<T>&, T, DenseVector<T>&,         \
                        const Executor&);                                     \
    template void scale(T, DenseVector<T>&, const Executor&);                 \
    template void copy(const DenseVector<T>&, DenseVector<T>&, const Executor&)

PSL_INSTANTIATE(float);
PSL_INSTANTIATE(double);

#undef PSL_INSTANTIATE


}  // namespace psl
