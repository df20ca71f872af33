// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

// Times the reference and parallel backends side by side on a 2D Laplacian.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <psl/core/blas1.hpp>
#include <psl/formats/conversion.hpp>
#include <psl/perfmodel/record.hpp>
#include <psl/perfmodel/stream.hpp>
#include <psl/spmv/spmv.hpp>


namespace {


psl::CooMatrix<double> laplacian_2d(psl::index_type grid)
{
    std::vector<psl::Triplet<double>> entries;
    const auto id = [grid](psl::index_type i, psl::index_type j) {
        return i * grid + j;
    };
    for (psl::index_type i = 0; i < grid; ++i) {
        for (psl::index_type j = 0; j < grid; ++j) {
            const auto row = id(i, j);
            entries.push_back({row, row, 4.0});
            if (i > 0) entries.push_back({row, id(i - 1, j), -1.0});
            if (i + 1 < grid) entries.push_back({row, id(i + 1, j), -1.0});
            if (j > 0) entries.push_back({row, id(i, j - 1), -1.0});
            if (j + 1 < grid) entries.push_back({row, id(i, j + 1), -1.0});
        }
    }
    const auto n = static_cast<psl::size_type>(grid) * grid;
    return psl::CooMatrix<double>::from_triplets(n, n, std::move(entries));
}


template <typename Body>
double mean_seconds(const psl::Protocol& protocol, Body&& body)
{
    psl::BenchmarkRecord r;
    r.times_s = psl::time_repetitions(protocol, body);
    psl::finalize_record(r, nullptr);
    return r.mean_time_s;
}


void row(const char* kernel, double ref, double par)
{
    std::printf("%-12s %14.6e %14.6e %9.2fx\n", kernel, ref, par, ref / par);
}


}  // namespace


int main(int argc, char** argv)
{
    CLI::App app{"Reference versus parallel backend timings"};
    int grid = 1000;
    int threads = 0;
    psl::size_type reps = 10;
    app.add_option("--grid", grid, "Laplacian grid side")->capture_default_str();
    app.add_option("--threads", threads, "Parallel threads (0: all)")
        ->capture_default_str();
    app.add_option("--reps", reps, "Timed repetitions")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const auto ref = psl::Executor::reference();
    const auto par = psl::Executor::parallel(threads);
    const psl::Protocol protocol{2, reps, true};

    const auto coo = laplacian_2d(grid);
    const auto csr = psl::coo_to_csr(coo);
    const auto n = coo.num_rows();
    const psl::DenseVector<double> x(n, 1.0);
    psl::DenseVector<double> y(n);

    std::printf("n = %zu, nnz = %zu, parallel threads = %d\n", n, coo.nnz(),
                par.thread_count());
    std::printf("%-12s %14s %14s %10s\n", "kernel", "reference [s]",
                "parallel [s]", "speedup");

    const auto compare = [&](const char* name, auto&& body) {
        row(name, mean_seconds(protocol, [&] { body(ref); }),
            mean_seconds(protocol, [&] { body(par); }));
    };
    compare("dot", [&](const auto& e) {
        volatile double sink = psl::dot(x, x, e);
        (void)sink;
    });
    compare("axpby", [&](const auto& e) { psl::axpby(2.0, x, 0.5, y, e); });
    compare("spmv_csr", [&](const auto& e) { psl::spmv(csr, x, y, e); });
    compare("spmv_coo", [&](const auto& e) { psl::spmv(coo, x, y, e); });

    const auto len = psl::default_stream_length(psl::Precision::f64);
    const auto triad = [&](const auto& e) {
        return psl::run_stream(psl::StreamKernel::triad, len,
                               psl::Precision::f64, protocol, e)
            .mean_time_s;
    };
    row("stream_triad", triad(ref), triad(par));
    return 0;
}
