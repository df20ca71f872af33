// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <psl/core/types.hpp>


namespace psl {


/**
 * Compressed sparse row matrix.
 *
 * row_ptrs has num_rows + 1 entries, starts at 0, never decreases and ends
 * at nnz. Column indices are strictly ascending within each row (canonical
 * form, so two equal matrices compare equal).
 */
template <Scalar T>
class CsrMatrix {
public:
    using value_type = T;

    CsrMatrix() : row_ptrs_(1, 0) {}

    CsrMatrix(size_type num_rows, size_type num_cols,
              std::vector<index_type> row_ptrs,
              std::vector<index_type> col_idxs, std::vector<T> values);

    size_type num_rows() const noexcept { return num_rows_; }
    size_type num_cols() const noexcept { return num_cols_; }
    size_type nnz() const noexcept { return values_.size(); }

    std::span<const index_type> row_ptrs() const noexcept { return row_ptrs_; }
    std::span<const index_type> col_idxs() const noexcept { return col_idxs_; }
    std::span<const T> values() const noexcept { return values_; }

    friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;

private:
    size_type num_rows_{};
    size_type num_cols_{};
    std::vector<index_type> row_ptrs_;
    std::vector<index_type> col_idxs_;
    std::vector<T> values_;
};


}  // namespace psl
