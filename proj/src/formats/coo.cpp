// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/coo.hpp>

#include <algorithm>
#include <string>

#include <psl/core/error.hpp>


namespace psl {


void check_index_extent(std::string_view what, size_type extent)
{
    if (extent > static_cast<size_type>(max_index)) {
        throw Overflow(std::string(what) + " " + std::to_string(extent) +
                       " does not fit a 32-bit index");
    }
}


template <Scalar T>
CooMatrix<T>::CooMatrix(size_type num_rows, size_type num_cols,
                        std::vector<index_type> row_idxs,
                        std::vector<index_type> col_idxs,
                        std::vector<T> values)
    : num_rows_{num_rows},
      num_cols_{num_cols},
      row_idxs_(std::move(row_idxs)),
      col_idxs_(std::move(col_idxs)),
      values_(std::move(values))
{
    check_index_extent("row count", num_rows_);
    check_index_extent("column count", num_cols_);
    check_index_extent("nonzero count", values_.size());
    if (row_idxs_.size() != values_.size() ||
        col_idxs_.size() != values_.size()) {
        throw InvalidArgument("COO arrays differ in length");
    }
    const auto rows = static_cast<index_type>(num_rows_);
    const auto cols = static_cast<index_type>(num_cols_);
    for (size_type k = 0; k < values_.size(); ++k) {
        const auto r = row_idxs_[k];
        const auto c = col_idxs_[k];
        if (r < 0 || r >= rows || c < 0 || c >= cols) {
            throw IndexOutOfRange(0, "COO entry " + std::to_string(k) +
                                         " at (" + std::to_string(r) + ", " +
                                         std::to_string(c) +
                                         ") lies outside the matrix");
        }
        if (k > 0) {
            const auto pr = row_idxs_[k - 1];
            const auto pc = col_idxs_[k - 1];
            if (r < pr || (r == pr && c <= pc)) {
                throw InvalidArgument(
                    "COO entries must be sorted by (row, col) and unique; "
                    "entry " +
                    std::to_string(k) + " violates this");
            }
        }
    }
}


template <Scalar T>
CooMatrix<T> CooMatrix<T>::from_triplets(size_type num_rows,
                                         size_type num_cols,
                                         std::vector<Triplet<T>> triplets)
{
    const auto less = [](const Triplet<T>& a, const Triplet<T>& b) {
        return a.row < b.row || (a.row == b.row && a.col < b.col);
    };
    if (!std::is_sorted(triplets.begin(), triplets.end(), less)) {
        std::stable_sort(triplets.begin(), triplets.end(), less);
    }

    std::vector<index_type> rows;
    std::vector<index_type> cols;
    std::vector<T> vals;
    rows.reserve(triplets.size());
    cols.reserve(triplets.size());
    vals.reserve(triplets.size());
    for (const auto& t : triplets) {
        if (!rows.empty() && rows.back() == t.row && cols.back() == t.col) {
            vals.back() += t.value;
        } else {
            rows.push_back(t.row);
            cols.push_back(t.col);
            vals.push_back(t.value);
        }
    }
    return CooMatrix(num_rows, num_cols, std::move(rows), std::move(cols),
                     std::move(vals));
}


template class CooMatrix<float>;
template class CooMatrix<double>;


}  // namespace psl
