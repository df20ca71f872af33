// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include <psl/solvers/flops.hpp>


using namespace psl;


TEST_CASE("documented per-iteration tallies")
{
    // 1 SpMV, 2 dots, 3 axpy-class updates on A = I_3
    CHECK(solver_flops(Method::cg, 1, 3, 3) == 36);
    CHECK(cg_iteration_flops(10, 30) == 160);
    CHECK(bicgstab_iteration_flops(10, 30) == 360);
    CHECK(bicgstab_half_iteration_flops(10, 30) == 200);
    CHECK(cgs_iteration_flops(10, 30) == 310);
    CHECK(gmres_inner_flops(0, 10, 30) == 138);
    CHECK(gmres_inner_flops(1, 10, 30) == 184);
    CHECK(gmres_cycle_flops(2, 10, 30, true) == 54);
    CHECK(gmres_cycle_flops(1, 10, 30, false) == 121);
}


TEST_CASE("frozen totals")
{
    CHECK(solver_flops(Method::cg, 1000, 10, 30) == 160'000);
    CHECK(solver_flops(Method::bicgstab, 1000, 10, 30) == 360'000);
    CHECK(solver_flops(Method::cgs, 1000, 10, 30) == 310'000);
    // cycles of 2 and 1 inner steps
    CHECK(solver_flops(Method::gmres, 3, 10, 30, 2) == 376 + 259);
    // thermal2 dimensions, 1000 iterations
    CHECK(solver_flops(Method::cg, 1000, 1'228'045, 8'580'313) ==
          1000ull * (2 * 8'580'313ull + 10 * 1'228'045ull));
}


TEST_CASE("zero iterations cost nothing")
{
    for (const auto m :
         {Method::cg, Method::bicgstab, Method::cgs, Method::gmres}) {
        CHECK(solver_flops(m, 0, 100, 500) == 0);
    }
}


TEST_CASE("short recurrences are linear in the iteration count")
{
    for (const auto m : {Method::cg, Method::bicgstab, Method::cgs}) {
        const auto one = solver_flops(m, 1, 1000, 7000);
        for (std::uint64_t k : {2u, 10u, 1000u}) {
            CHECK(solver_flops(m, k, 1000, 7000) == k * one);
        }
    }
}


TEST_CASE("gmres closed form equals the step-by-step sum")
{
    for (std::uint64_t restart : {1u, 2u, 5u, 30u, 100u}) {
        for (std::uint64_t iters : {1u, 4u, 5u, 6u, 99u, 100u, 101u, 1000u}) {
            std::uint64_t expected = 0;
            bool first = true;
            for (std::uint64_t done = 0; done < iters;) {
                const auto steps = std::min(restart, iters - done);
                for (std::uint64_t j = 0; j < steps; ++j) {
                    expected += gmres_inner_flops(j, 321, 4567);
                }
                expected += gmres_cycle_flops(steps, 321, 4567, first);
                first = false;
                done += steps;
            }
            CHECK(solver_flops(Method::gmres, iters, 321, 4567, restart) ==
                  expected);
        }
    }
}
