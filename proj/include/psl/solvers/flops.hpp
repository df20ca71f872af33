// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include <psl/solvers/solver.hpp>


namespace psl {


/**
 * @file
 * Floating point operation tallies of the solvers.
 *
 * Counting convention, for vectors of length n and a matrix with nz stored
 * entries:
 *
 *   SpMV                      2 nz
 *   dot / squared norm        2 n
 *   axpy-class update         2 n   (y += a x, y = x + b y)
 *   vector sum w = u + q      1 n
 *   vector scaling            1 n
 *
 * The initial residual r0 = b - A x0 and the final residual check are setup
 * and are not counted. Per iteration:
 *
 *   CG        1 SpMV, 2 dots, 3 updates                     2 nz + 10 n
 *   BiCGSTAB  2 SpMV, 6 dots, 6 updates                     4 nz + 24 n
 *             (exit after the half step: 1 SpMV, 3 dots,
 *              3 updates                                    2 nz + 14 n)
 *   CGS       2 SpMV, 3 dots, 6 updates, 1 vector sum       4 nz + 19 n
 *   GMRES     inner step j (0-based within its cycle):
 *             1 SpMV, j+1 MGS projections (dot + update), norm, scaling,
 *             j+1 Givens applications of 6 flops plus 2 for the
 *             right-hand side:       2 nz + 4 n (j+1) + 3 n + 6 (j+1) + 2
 *             per cycle of k steps: normalizing v0 (n), back substitution
 *             (k^2) and the solution update (2 n k); every cycle after the
 *             first also recomputes the residual and its norm (2 nz + 3 n).
 */


constexpr std::uint64_t cg_iteration_flops(std::uint64_t n,
                                           std::uint64_t nz) noexcept
{
    return 2 * nz + 10 * n;
}

constexpr std::uint64_t bicgstab_iteration_flops(std::uint64_t n,
                                                 std::uint64_t nz) noexcept
{
    return 4 * nz + 24 * n;
}

constexpr std::uint64_t bicgstab_half_iteration_flops(
    std::uint64_t n, std::uint64_t nz) noexcept
{
    return 2 * nz + 14 * n;
}

constexpr std::uint64_t cgs_iteration_flops(std::uint64_t n,
                                            std::uint64_t nz) noexcept
{
    return 4 * nz + 19 * n;
}

constexpr std::uint64_t gmres_inner_flops(std::uint64_t step, std::uint64_t n,
                                          std::uint64_t nz) noexcept
{
    return 2 * nz + 4 * n * (step + 1) + 3 * n + 6 * (step + 1) + 2;
}

constexpr std::uint64_t gmres_cycle_flops(std::uint64_t steps,
                                          std::uint64_t n, std::uint64_t nz,
                                          bool first_cycle) noexcept
{
    return n + steps * steps + 2 * n * steps +
           (first_cycle ? 0 : 2 * nz + 3 * n);
}


/**
 * Closed-form flop count of `iterations` iterations of `method`.
 *
 * For GMRES every cycle except the last runs `restart` inner steps, as in
 * fixed-iteration benchmark runs. Short-recurrence methods are linear in
 * `iterations`.
 */
std::uint64_t solver_flops(Method method, std::uint64_t iterations,
                           std::uint64_t n, std::uint64_t nz,
                           std::uint64_t restart = 100) noexcept;


}  // namespace psl
