// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/harness.hpp>

#include <algorithm>
#include <string>

#include <psl/core/error.hpp>
#include <psl/formats/conversion.hpp>
#include <psl/solvers/flops.hpp>
#include <psl/spmv/spmv.hpp>


namespace psl {
namespace {


template <Scalar T>
void describe(BenchmarkRecord& record, const MatrixMetadata& metadata,
              Format format, const Executor& exec)
{
    record.matrix = metadata;
    record.precision = precision_of<T>;
    record.format = format;
    record.executor = std::string(exec.name());
    record.threads = exec.thread_count();
}


template <typename Matrix>
std::vector<double> time_spmv(const Matrix& m, const Executor& exec,
                              const Protocol& protocol)
{
    using T = typename Matrix::value_type;
    const DenseVector<T> x(m.num_cols(), T{1});
    DenseVector<T> y(m.num_rows());
    return time_repetitions(protocol, [&] { spmv(m, x, y, exec); });
}


template <typename Matrix>
SolverResult<typename Matrix::value_type> timed_solve(
    const Matrix& m, const Executor& exec, const SolverBenchmark& options,
    double& seconds)
{
    using T = typename Matrix::value_type;
    const auto b = multiply(m, DenseVector<T>(m.num_cols(), T{1}), exec);
    const DenseVector<T> x0(m.num_rows());
    SolverConfig config;
    config.method = options.method;
    config.restart = options.restart;
    config.stop_mode = StopMode::fixed_iterations;
    config.max_iters = std::min(options.warmup_iterations, options.iterations);
    if (config.max_iters > 0) {
        solve(m, b, x0, config, exec);
    }
    config.max_iters = options.iterations;
    SolverResult<T> result;
    const auto times =
        time_repetitions(Protocol{0, 1, options.timing},
                         [&] { result = solve(m, b, x0, config, exec); });
    seconds = times.front();
    return result;
}


}  // namespace


size_type spmv_per_iteration(Method method) noexcept
{
    return method == Method::bicgstab || method == Method::cgs ? 2 : 1;
}


template <Scalar T>
BenchmarkRecord benchmark_spmv(const CooMatrix<T>& matrix,
                               const MatrixMetadata& metadata, Format format,
                               const Executor& exec, const DeviceSpec& device,
                               const Protocol& protocol)
{
    BenchmarkRecord record;
    record.kernel = "spmv";
    describe<T>(record, metadata, format, exec);
    record.warmups = protocol.warmups;
    record.repetitions = protocol.repetitions;
    if (format == Format::csr) {
        record.times_s = time_spmv(coo_to_csr(matrix), exec, protocol);
    } else {
        record.times_s = time_spmv(matrix, exec, protocol);
    }
    const auto nz = static_cast<std::uint64_t>(matrix.nnz());
    record.flops = spmv_flops(nz);
    record.bytes = footprint_bytes(format, nz, precision_of<T>,
                                   FootprintMode::full, matrix.num_rows(),
                                   matrix.num_cols());
    record.bytes_simplified = footprint_bytes(format, nz, precision_of<T>,
                                              FootprintMode::simplified);
    if (metadata.symmetric_expanded()) {
        record.notes = "symmetric storage expanded; nz counts both triangles";
    }
    finalize_record(record, &device);
    return record;
}


template <Scalar T>
BenchmarkRecord benchmark_solver(const CooMatrix<T>& matrix,
                                 const MatrixMetadata& metadata,
                                 Format format, const Executor& exec,
                                 const DeviceSpec& device,
                                 const SolverBenchmark& options)
{
    if (matrix.num_rows() != matrix.num_cols()) {
        throw DimensionMismatch("benchmark_solver", matrix.num_rows(),
                                matrix.num_cols());
    }
    if (options.iterations < 1) {
        throw InvalidArgument("solver benchmark needs at least 1 iteration");
    }
    BenchmarkRecord record;
    record.kernel = "solver_" + std::string(to_string(options.method));
    describe<T>(record, metadata, format, exec);
    record.warmups = 1;
    record.repetitions = 1;

    double seconds = 0.0;
    const auto result =
        format == Format::csr
            ? timed_solve(coo_to_csr(matrix), exec, options, seconds)
            : timed_solve(matrix, exec, options, seconds);
    record.times_s = {seconds};

    const auto n = static_cast<std::uint64_t>(matrix.num_rows());
    const auto nz = static_cast<std::uint64_t>(matrix.nnz());
    record.flops = solver_flops(options.method, result.iterations, n, nz,
                                options.restart);
    const auto spmvs = result.iterations * spmv_per_iteration(options.method);
    record.bytes = spmvs * footprint_bytes(format, nz, precision_of<T>,
                                           FootprintMode::full, n, n);
    record.bytes_simplified =
        spmvs * footprint_bytes(format, nz, precision_of<T>,
                                FootprintMode::simplified);
    record.iterations = result.iterations;
    record.converged = result.converged;
    if (result.breakdown) {
        record.breakdown = std::string(to_string(*result.breakdown));
    }
    record.notes = "b = A 1, x0 = 0; bytes count SpMV traffic only; "
                   "warm-up segment of " +
                   std::to_string(std::min(options.warmup_iterations,
                                           options.iterations)) +
                   " iterations";
    if (options.method == Method::gmres) {
        record.notes +=
            "; restart " + std::to_string(options.restart) + ", " +
            std::to_string(result.outer_iterations) + " cycles";
    }
    if (metadata.symmetric_expanded()) {
        record.notes += "; symmetric storage expanded";
    }
    finalize_record(record, &device);
    return record;
}


#define PSL_INSTANTIATE(T)                                                  \
    template BenchmarkRecord benchmark_spmv<T>(                             \
        const CooMatrix<T>&, const MatrixMetadata&, Format,                 \
        const Executor&, const DeviceSpec&, const Protocol&);               \
    template BenchmarkRecord benchmark_solver<T>(                           \
        const CooMatrix<T>&, const MatrixMetadata&, Format,                 \
        const Executor&, const DeviceSpec&, const SolverBenchmark&)

PSL_INSTANTIATE(float);
PSL_INSTANTIATE(double);

#undef PSL_INSTANTIATE


}  // namespace psl
