// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/conversion.hpp>

#include <vector>


namespace psl {


template <Scalar T>
CsrMatrix<T> coo_to_csr(const CooMatrix<T>& m)
{
    std::vector<index_type> row_ptrs(m.num_rows() + 1, 0);
    for (const auto r : m.row_idxs()) {
        ++row_ptrs[static_cast<size_type>(r) + 1];
    }
    for (size_type row = 0; row < m.num_rows(); ++row) {
        row_ptrs[row + 1] += row_ptrs[row];
    }
    return CsrMatrix<T>(
        m.num_rows(), m.num_cols(), std::move(row_ptrs),
        std::vector<index_type>(m.col_idxs().begin(), m.col_idxs().end()),
        std::vector<T>(m.values().begin(), m.values().end()));
}


template <Scalar T>
CooMatrix<T> csr_to_coo(const CsrMatrix<T>& m)
{
    std::vector<index_type> row_idxs(m.nnz());
    const auto row_ptrs = m.row_ptrs();
    for (size_type row = 0; row < m.num_rows(); ++row) {
        for (auto k = row_ptrs[row]; k < row_ptrs[row + 1]; ++k) {
            row_idxs[static_cast<size_type>(k)] = static_cast<index_type>(row);
        }
    }
    return CooMatrix<T>(
        m.num_rows(), m.num_cols(), std::move(row_idxs),
        std::vector<index_type>(m.col_idxs().begin(), m.col_idxs().end()),
        std::vector<T>(m.values().begin(), m.values().end()));
}


template CsrMatrix<float> coo_to_csr(const CooMatrix<float>&);
template CsrMatrix<double> coo_to_csr(const CooMatrix<double>&);
template CooMatrix<float> csr_to_coo(const CsrMatrix<float>&);
template CooMatrix<double> csr_to_coo(const CsrMatrix<double>&);


}  // namespace psl
