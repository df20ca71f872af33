// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <psl/core/executor.hpp>
#include <psl/formats/coo.hpp>
#include <psl/formats/footprint.hpp>
#include <psl/formats/matrix_market.hpp>
#include <psl/perfmodel/device.hpp>
#include <psl/perfmodel/record.hpp>
#include <psl/solvers/solver.hpp>


namespace psl {


/**
 * Times y = A x with x = 1 after converting `matrix` to `format`.
 *
 * gflops counts 2 nz per apply, `bytes` is the Full footprint (matrix plus
 * both vectors) and `bytes_simplified` the matrix-only footprint.
 */
template <Scalar T>
BenchmarkRecord benchmark_spmv(const CooMatrix<T>& matrix,
                               const MatrixMetadata& metadata, Format format,
                               const Executor& exec, const DeviceSpec& device,
                               const Protocol& protocol = {});


struct SolverBenchmark {
    Method method{Method::cg};
    size_type iterations{1000};
    size_type restart{100};
    /// length of the untimed warm-up segment, capped at `iterations`
    size_type warmup_iterations{10};
    bool timing{true};
};


/**
 * Solves A x = A 1 from x = 0 for exactly `iterations` iterations after one
 * untimed warm-up segment.
 *
 * gflops is solver_flops over the wall time of the timed run. `bytes`
 * accounts for the SpMV traffic only. A breakdown is recorded in the
 * record rather than thrown.
 */
template <Scalar T>
BenchmarkRecord benchmark_solver(const CooMatrix<T>& matrix,
                                 const MatrixMetadata& metadata,
                                 Format format, const Executor& exec,
                                 const DeviceSpec& device,
                                 const SolverBenchmark& options = {});


/// SpMV applications per iteration of `method`.
size_type spmv_per_iteration(Method method) noexcept;


}  // namespace psl
