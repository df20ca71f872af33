// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>


namespace psl {


/// A SuiteSparse matrix used in the solver benchmarks.
struct CatalogEntry {
    std::string_view name;
    std::string_view group;
    std::string_view origin;
    std::uint64_t n;
    std::uint64_t nz;
};


std::span<const CatalogEntry> solver_test_matrices() noexcept;

std::optional<CatalogEntry> find_test_matrix(std::string_view name) noexcept;


}  // namespace psl
