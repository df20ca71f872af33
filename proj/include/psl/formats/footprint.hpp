// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <psl/core/types.hpp>


namespace psl {


enum class Format { csr, coo };

constexpr std::string_view to_string(Format f) noexcept
{
    return f == Format::csr ? "csr" : "coo";
}

std::optional<Format> parse_format(std::string_view s) noexcept;


enum class FootprintMode {
    /// values and indices of the stored entries only
    simplified,
    /// adds the CSR row pointers, one read of every input-vector element and
    /// one write of every output element
    full,
};


/**
 * Bytes an SpMV moves through memory.
 *
 * Simplified: CSR = nz * (vb + ib), COO = nz * (vb + 2 ib).
 * Full: Simplified + (num_rows + 1) * ib for CSR, plus
 * (num_rows + num_cols) * vb vector traffic for both formats.
 * `num_cols` defaults to `num_rows` (square matrix).
 */
std::uint64_t footprint_bytes(Format format, std::uint64_t nz,
                              Precision precision, FootprintMode mode,
                              std::uint64_t num_rows = 0,
                              std::optional<std::uint64_t> num_cols = {});


}  // namespace psl
