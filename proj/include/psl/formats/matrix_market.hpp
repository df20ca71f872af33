// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <psl/formats/coo.hpp>


namespace psl {


struct MatrixMetadata {
    std::string name;
    std::string origin;
    /// rows
    std::uint64_t n{};
    std::uint64_t num_cols{};
    /// stored entries after symmetric expansion and duplicate merging
    std::uint64_t nz{};
    /// entry count declared on the size line
    std::uint64_t declared_entries{};
    /// "general" or "symmetric"
    std::string symmetry{"general"};

    bool symmetric_expanded() const { return symmetry == "symmetric"; }

    friend bool operator==(const MatrixMetadata&,
                           const MatrixMetadata&) = default;
};


template <Scalar T>
struct MatrixMarketData {
    CooMatrix<T> matrix;
    MatrixMetadata metadata;
};


/**
 * Reads a "matrix coordinate (real|integer|pattern) (general|symmetric)"
 * MatrixMarket stream.
 *
 * Symmetric input is expanded to full storage by mirroring off-diagonal
 * entries, pattern entries get the value 1, duplicate entries are summed and
 * the result is sorted by (row, col). The name and origin come from the
 * SuiteSparse "% name:" and "% kind:" comments when present, otherwise
 * `name_hint` is used.
 *
 * Throws ParseError, UnsupportedField, IndexOutOfRange or Overflow.
 */
template <Scalar T>
MatrixMarketData<T> read_matrix_market(std::istream& in,
                                       std::string_view name_hint = {});

/// Same as above; the name defaults to the file stem. Throws IoError when the
/// file cannot be opened.
template <Scalar T>
MatrixMarketData<T> read_matrix_market(const std::filesystem::path& path);


/// Writes `m` as "matrix coordinate real general" with 17 significant digits.
template <Scalar T>
void write_matrix_market(std::ostream& out, const CooMatrix<T>& m,
                         std::string_view comment = {});


}  // namespace psl
