// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/solvers/flops.hpp>

#include <algorithm>


namespace psl {


std::uint64_t solver_flops(Method method, std::uint64_t iterations,
                           std::uint64_t n, std::uint64_t nz,
                           std::uint64_t restart) noexcept
{
    switch (method) {
    case Method::cg:
        return iterations * cg_iteration_flops(n, nz);
    case Method::bicgstab:
        return iterations * bicgstab_iteration_flops(n, nz);
    case Method::cgs:
        return iterations * cgs_iteration_flops(n, nz);
    case Method::gmres:
        break;
    }
    restart = std::max<std::uint64_t>(restart, 1);
    std::uint64_t total = 0;
    bool first = true;
    for (std::uint64_t done = 0; done < iterations;) {
        const auto steps = std::min(restart, iterations - done);
        // sum over j < steps of gmres_inner_flops(j)
        total += steps * (2 * nz + 3 * n + 2) +
                 (4 * n + 6) * steps * (steps + 1) / 2;
        total += gmres_cycle_flops(steps, n, nz, first);
        first = false;
        done += steps;
    }
    return total;
}


}  // namespace psl
