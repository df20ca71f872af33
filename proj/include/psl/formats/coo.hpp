// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <psl/core/types.hpp>


namespace psl {


template <Scalar T>
struct Triplet {
    index_type row;
    index_type col;
    T value;
};


/**
 * Coordinate-format sparse matrix: one (row, column, value) triplet per
 * stored entry.
 *
 * Entries are sorted by (row, col), unique, and in range. The constructor
 * validates this and throws InvalidArgument / IndexOutOfRange / Overflow;
 * use from_triplets() for unsorted input with duplicates. Explicit zeros are
 * kept.
 */
template <Scalar T>
class CooMatrix {
public:
    using value_type = T;

    CooMatrix() = default;

    CooMatrix(size_type num_rows, size_type num_cols,
              std::vector<index_type> row_idxs,
              std::vector<index_type> col_idxs, std::vector<T> values);

    /// Sorts the triplets and sums duplicates (in input order).
    static CooMatrix from_triplets(size_type num_rows, size_type num_cols,
                                   std::vector<Triplet<T>> triplets);

    size_type num_rows() const noexcept { return num_rows_; }
    size_type num_cols() const noexcept { return num_cols_; }
    size_type nnz() const noexcept { return values_.size(); }

    std::span<const index_type> row_idxs() const noexcept { return row_idxs_; }
    std::span<const index_type> col_idxs() const noexcept { return col_idxs_; }
    std::span<const T> values() const noexcept { return values_; }

    friend bool operator==(const CooMatrix&, const CooMatrix&) = default;

private:
    size_type num_rows_{};
    size_type num_cols_{};
    std::vector<index_type> row_idxs_;
    std::vector<index_type> col_idxs_;
    std::vector<T> values_;
};


/// Throws Overflow unless `extent` fits a 32-bit index.
void check_index_extent(std::string_view what, size_type extent);


}  // namespace psl
