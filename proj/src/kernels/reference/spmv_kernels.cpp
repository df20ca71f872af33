// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/spmv_kernels.hpp"


namespace psl::kernels::reference {


template <Scalar T>
void spmv_csr(const Executor&, const CsrMatrix<T>& m, std::span<const T> x,
              std::span<T> y, T alpha, T beta)
{
    const auto row_ptrs = m.row_ptrs();
    const auto col_idxs = m.col_idxs();
    const auto values = m.values();
    for (size_type row = 0; row < m.num_rows(); ++row) {
        T sum{};
        for (auto k = row_ptrs[row]; k < row_ptrs[row + 1]; ++k) {
            sum += values[k] * x[col_idxs[k]];
        }
        y[row] = beta == T{0} ? alpha * sum : alpha * sum + beta * y[row];
    }
}


template <Scalar T>
void spmv_coo(const Executor&, const CooMatrix<T>& m, std::span<const T> x,
              std::span<T> y, T alpha, T beta)
{
    for (auto& v : y) {
        v = beta == T{0} ? T{0} : beta * v;
    }
    const auto row_idxs = m.row_idxs();
    const auto col_idxs = m.col_idxs();
    const auto values = m.values();
    const auto nnz = m.nnz();
    size_type k = 0;
    while (k < nnz) {
        const auto row = row_idxs[k];
        T sum{};
        for (; k < nnz && row_idxs[k] == row; ++k) {
            sum += values[k] * x[col_idxs[k]];
        }
        y[row] += alpha * sum;
    }
}


template void spmv_csr<float>(const Executor&, const CsrMatrix<float>&,
                              std::span<const float>, std::span<float>, float,
                              float);
template void spmv_csr<double>(const Executor&, const CsrMatrix<double>&,
                               std::span<const double>, std::span<double>,
                               double, double);
template void spmv_coo<float>(const Executor&, const CooMatrix<float>&,
                              std::span<const float>, std::span<float>, float,
                              float);
template void spmv_coo<double>(const Executor&, const CooMatrix<double>&,
                               std::span<const double>, std::span<double>,
                               double, double);


}  // namespace psl::kernels::reference
