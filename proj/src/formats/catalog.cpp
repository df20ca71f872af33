// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/formats/catalog.hpp>

#include <array>


namespace psl {
namespace {


constexpr std::array<CatalogEntry, 10> matrices{{
    {"rajat31", "Rajat", "Circuit Simulation Problem", 4'690'002, 20'316'253},
    {"atmosmodj", "Bourchtein", "CFD Problem", 1'270'432, 8'814'880},
    {"nlpkkt160", "Schenk", "Nonlinear Programming Problem", 8'345'600,
     225'422'112},
    {"thermal2", "Schmid", "Unstructured FEM", 1'228'045, 8'580'313},
    {"CurlCurl_4", "Bodendiek", "2nd order Maxwell", 2'380'515, 26'515'867},
    {"Bump_2911", "Janna", "3D Geomechanical Simulation", 2'911'419,
     127'729'899},
    {"Cube_Coup_dt0", "Janna", "3D Consolidation Problem", 2'164'760,
     124'406'070},
    {"StocF-1456", "Janna", "Flow in Porous Medium", 1'465'137, 21'005'389},
    {"circuit5M", "Freescale", "Circuit Simulation Problem", 5'558'326,
     59'524'291},
    {"FullChip", "Freescale", "Circuit Simulation Problem", 2'987'012,
     26'621'990},
}};


}  // namespace


std::span<const CatalogEntry> solver_test_matrices() noexcept
{
    return matrices;
}


std::optional<CatalogEntry> find_test_matrix(std::string_view name) noexcept
{
    for (const auto& m : matrices) {
        if (m.name == name) {
            return m;
        }
    }
    return std::nullopt;
}


}  // namespace psl
