// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/footprint.hpp>


namespace psl {


std::optional<Format> parse_format(std::string_view s) noexcept
{
    if (s == "csr") {
        return Format::csr;
    }
    if (s == "coo") {
        return Format::coo;
    }
    return std::nullopt;
}


std::uint64_t footprint_bytes(Format format, std::uint64_t nz,
                              Precision precision, FootprintMode mode,
                              std::uint64_t num_rows,
                              std::optional<std::uint64_t> num_cols)
{
    const std::uint64_t vb = value_bytes(precision);
    const std::uint64_t ib = index_bytes;
    const auto indices_per_entry = format == Format::csr ? 1 : 2;
    auto bytes = nz * (vb + indices_per_entry * ib);
    if (mode == FootprintMode::full) {
        if (format == Format::csr) {
            bytes += (num_rows + 1) * ib;
        }
        bytes += (num_rows + num_cols.value_or(num_rows)) * vb;
    }
    return bytes;
}


}  // namespace psl
