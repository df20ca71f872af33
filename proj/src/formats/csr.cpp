// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/csr.hpp>

#include <string>

#include <psl/core/error.hpp>
#include <psl/formats/coo.hpp>


namespace psl {


template <Scalar T>
CsrMatrix<T>::CsrMatrix(size_type num_rows, size_type num_cols,
                        std::vector<index_type> row_ptrs,
                        std::vector<index_type> col_idxs,
                        std::vector<T> values)
    : num_rows_{num_rows},
      num_cols_{num_cols},
      row_ptrs_(std::move(row_ptrs)),
      col_idxs_(std::move(col_idxs)),
      values_(std::move(values))
{
    check_index_extent("row count", num_rows_);
    check_index_extent("column count", num_cols_);
    check_index_extent("nonzero count", values_.size());
    if (col_idxs_.size() != values_.size()) {
        throw InvalidArgument("CSR column and value arrays differ in length");
    }
    if (row_ptrs_.size() != num_rows_ + 1) {
        throw InvalidArgument("CSR row pointer array needs num_rows + 1 = " +
                              std::to_string(num_rows_ + 1) + " entries, got " +
                              std::to_string(row_ptrs_.size()));
    }
    if (row_ptrs_.front() != 0 ||
        row_ptrs_.back() != static_cast<index_type>(values_.size())) {
        throw InvalidArgument("CSR row pointers must start at 0 and end at nnz");
    }
    const auto cols = static_cast<index_type>(num_cols_);
    for (size_type row = 0; row < num_rows_; ++row) {
        const auto begin = row_ptrs_[row];
        const auto end = row_ptrs_[row + 1];
        if (end < begin) {
            throw InvalidArgument("CSR row pointers decrease at row " +
                                  std::to_string(row));
        }
        for (auto k = begin; k < end; ++k) {
            const auto c = col_idxs_[k];
            if (c < 0 || c >= cols) {
                throw IndexOutOfRange(0, "CSR column index " +
                                             std::to_string(c) + " in row " +
                                             std::to_string(row) +
                                             " out of range");
            }
            if (k > begin && c <= col_idxs_[k - 1]) {
                throw InvalidArgument(
                    "CSR column indices must be strictly ascending in row " +
                    std::to_string(row));
            }
        }
    }
}


template class CsrMatrix<float>;
template class CsrMatrix<double>;


}  // namespace psl
