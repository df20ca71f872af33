// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/spmv/spmv.hpp>

#include <psl/core/error.hpp>

#include "kernels/spmv_kernels.hpp"


namespace psl {
namespace ops {


template <Scalar T>
const spmv_csr_op<T>& spmv_csr()
{
    static const auto op =
        spmv_csr_op<T>("spmv_csr")
            .bind(ExecutorKind::reference, kernels::reference::spmv_csr<T>)
            .bind(ExecutorKind::parallel, kernels::omp::spmv_csr<T>);
    return op;
}


template <Scalar T>
const spmv_coo_op<T>& spmv_coo()
{
    static const auto op =
        spmv_coo_op<T>("spmv_coo")
            .bind(ExecutorKind::reference, kernels::reference::spmv_coo<T>)
            .bind(ExecutorKind::parallel, kernels::omp::spmv_coo<T>);
    return op;
}


}  // namespace ops


namespace {


template <typename Matrix, Scalar T>
void check_workload(std::string_view where, const Matrix& m,
                    const DenseVector<T>& x, const DenseVector<T>& y)
{
    if (x.size() != m.num_cols()) {
        throw DimensionMismatch(std::string(where) + " input vector",
                                m.num_cols(), x.size());
    }
    if (y.size() != m.num_rows()) {
        throw DimensionMismatch(std::string(where) + " output vector",
                                m.num_rows(), y.size());
    }
    if (static_cast<const void*>(&x) == static_cast<const void*>(&y)) {
        throw InvalidArgument(std::string(where) +
                              ": input and output vector alias");
    }
}


}  // namespace


template <Scalar T>
void spmv_csr(const CsrMatrix<T>& m, const DenseVector<T>& x,
              DenseVector<T>& y, T alpha, T beta, const Executor& exec)
{
    check_workload("spmv_csr", m, x, y);
    dispatch(ops::spmv_csr<T>(), exec, m, x.values(), y.values(), alpha,
             beta);
}


template <Scalar T>
void spmv_coo(const CooMatrix<T>& m, const DenseVector<T>& x,
              DenseVector<T>& y, T alpha, T beta, const Executor& exec)
{
    check_workload("spmv_coo", m, x, y);
    dispatch(ops::spmv_coo<T>(), exec, m, x.values(), y.values(), alpha,
             beta);
}


#define PSL_INSTANTIATE(T)                                                  \
    template const ops::spmv_csr_op<T>& ops::spmv_csr<T>();                 \
    template const ops::spmv_coo_op<T>& ops::spmv_coo<T>();                 \
    template void spmv_csr(const CsrMatrix<T>&, const DenseVector<T>&,      \
                           DenseVector<T>&, T, T, const Executor&);         \
    template void spmv_coo(const CooMatrix<T>&, const DenseVector<T>&,      \
                           DenseVector<T>&, T, T, const Executor&)

PSL_INSTANTIATE(float);
PSL_INSTANTIATE(double);

#undef PSL_INSTANTIATE


}  // namespace psl
