// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <streambuf>
#include <string>
#include <vector>

#include <json.hpp>

#include <psl/cli/app.hpp>
#include <psl/core/error.hpp>
#include <psl/formats/conversion.hpp>
#include <psl/formats/matrix_market.hpp>
#include <psl/perfmodel/device.hpp>
#include <psl/perfmodel/harness.hpp>
#include <psl/perfmodel/roofline.hpp>
#include <psl/perfmodel/stream.hpp>
#include <psl/solvers/flops.hpp>
#include <psl/solvers/solver.hpp>
#include <psl/spmv/spmv.hpp>

#include "oracles.hpp"


using namespace psl;
using nlohmann::json;


namespace {


/// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
};


const std::vector<Executor> executors{Executor::reference(),
                                      Executor::parallel(4)};


bool in_range(double v, double lo, double hi) { return v >= lo && v <= hi; }


void criterion_1(Check& check)
{
    check(arithmetic_intensity(Format::csr, Precision::f64) == Ratio{1, 6},
          "CSR f64 != 1/6");
    check(arithmetic_intensity(Format::coo, Precision::f64) == Ratio{1, 8},
          "COO f64 != 1/8");
    check(arithmetic_intensity(Format::csr, Precision::f32) == Ratio{1, 4},
          "CSR f32 != 1/4");
    check(arithmetic_intensity(Format::coo, Precision::f32) == Ratio{1, 6},
          "COO f32 != 1/6");
}


void check_bounds(Check& check, const DeviceSpec& gen9,
                  const DeviceSpec& gen12, const std::string& source)
{
    const auto bw9 = gen9.measured_bandwidth_gbs;
    const auto bw12 = gen12.measured_bandwidth_gbs;
    check(in_range(spmv_bound(bw9, arithmetic_intensity(Format::csr,
                                                        Precision::f64)),
                   6.16, 6.17),
          source + ": gen9 CSR f64 bound");
    check(in_range(spmv_bound(bw9, arithmetic_intensity(Format::coo,
                                                        Precision::f64)),
                   4.62, 4.63),
          source + ": gen9 COO f64 bound");
    check(spmv_bound(bw12, arithmetic_intensity(Format::csr,
                                                Precision::f32)) == 14.5,
          source + ": gen12 CSR f32 bound");
    check(in_range(spmv_bound(bw12, arithmetic_intensity(Format::coo,
                                                         Precision::f32)),
                   9.66, 9.67),
          source + ": gen12 COO f32 bound");
}


void criterion_2(Check& check)
{
    check(in_range(spmv_bound(37.0, Ratio{1, 6}), 6.16, 6.17),
          "spmv_bound(37, 1/6)");
    check(in_range(spmv_bound(37.0, Ratio{1, 8}), 4.62, 4.63),
          "spmv_bound(37, 1/8)");
    check(spmv_bound(58.0, Ratio{1, 4}) == 14.5, "spmv_bound(58, 1/4)");
    check(in_range(spmv_bound(58.0, Ratio{1, 6}), 9.66, 9.67),
          "spmv_bound(58, 1/6)");
    check_bounds(check, gen9_device(), gen12_device(), "presets");
}


void check_roofline(Check& check, const DeviceSpec& device,
                    const std::string& source)
{
    for (const auto p : {Precision::f64, Precision::f32}) {
        const RooflineModel model{device, p};
        const auto bw = device.measured_bandwidth_gbs;
        const auto peak = device.peak(p);
        const auto ridge = model.ridge_point();
        const auto name = source + " " + std::string(to_string(p));
        check(std::abs(bw * ridge - peak) <= 1e-12 * peak,
              name + ": ridge not where the roofs meet");
        const auto below = model.attainable(ridge * (1 - 1e-12));
        const auto above = model.attainable(ridge * (1 + 1e-12));
        check(std::abs(model.attainable(ridge) - peak) <= 1e-12 * peak,
              name + ": discontinuous at the ridge");
        check(std::abs(below - peak) <= 2e-12 * peak &&
                  std::abs(above - peak) <= 2e-12 * peak,
              name + ": jump around the ridge");
        for (int k = 0; k <= 400; ++k) {
            const double ai = ridge * k / 200.0;
            const auto v = model.attainable(ai);
            const auto expected = ai <= ridge ? bw * ai : peak;
            check(std::abs(v - expected) <= 1e-12 * std::max(expected, 1.0),
                  name + ": off the roofline at ai " + std::to_string(ai));
        }
        check(model.attainable(1e9) == peak, name + ": not flat at peak");
    }
}


void criterion_3(Check& check)
{
    DeviceSpec gen9{"gen9", 41.6, 37.0,
                    {{Precision::f64, 105.0}, {Precision::f32, 430.0}}};
    gen9.validate();
    check(gen9.peak_gflops == gen9_device().peak_gflops &&
              gen9.measured_bandwidth_gbs ==
                  gen9_device().measured_bandwidth_gbs,
          "preset differs from the entered values");
    check_roofline(check, gen9, "gen9");
    check_roofline(check, gen12_device(), "gen12");
    const RooflineModel f64{gen9, Precision::f64};
    check(f64.attainable(1000.0) == 105.0, "gen9 f64 compute roof");
    check(std::abs(f64.attainable(1.0 / 6.0) - 37.0 / 6.0) <=
              1e-15 * 37.0 / 6.0,
          "gen9 f64 memory roof");
}


template <Scalar T>
void spmv_oracle(Check& check, std::mt19937_64& rng, int trials)
{
    std::uniform_int_distribution<size_type> dim(1, 64);
    std::uniform_real_distribution<double> density(0.0, 0.3);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    const double eps = std::numeric_limits<T>::epsilon();
    for (int t = 0; t < trials; ++t) {
        const auto m =
            test::random_coo<T>(rng, dim(rng), dim(rng), density(rng));
        const auto csr = coo_to_csr(m);
        DenseVector<T> x(m.num_cols());
        for (auto& v : x) {
            v = static_cast<T>(entry(rng));
        }
        const auto dense = test::to_dense(m);
        const auto ax = test::dense_matvec(dense, x);
        std::vector<size_type> row_nnz(m.num_rows());
        double max_a = 0.0;
        for (size_type k = 0; k < m.nnz(); ++k) {
            ++row_nnz[m.row_idxs()[k]];
            max_a = std::max(max_a, std::abs(double(m.values()[k])));
        }
        double max_x = 0.0;
        for (const auto v : x) {
            max_x = std::max(max_x, std::abs(double(v)));
        }
        const auto row_max =
            row_nnz.empty() ? 0 : *std::max_element(row_nnz.begin(),
                                                    row_nnz.end());
        const double tol = 16 * eps * double(row_max) * max_a * max_x;
        for (const auto& exec : executors) {
            DenseVector<T> yc(m.num_rows(), T{7});
            DenseVector<T> yo(m.num_rows(), T{7});
            spmv_csr(csr, x, yc, T{1}, T{0}, exec);
            spmv_coo(m, x, yo, T{1}, T{0}, exec);
            for (size_type i = 0; i < m.num_rows(); ++i) {
                const bool ok =
                    std::abs(static_cast<long double>(yc[i]) - ax[i]) <= tol &&
                    std::abs(static_cast<long double>(yo[i]) - ax[i]) <= tol &&
                    std::abs(double(yc[i]) - double(yo[i])) <= tol;
                if (!ok) {
                    check(false, "trial " + std::to_string(t) + " row " +
                                     std::to_string(i) + " exceeds tolerance");
                    return;
                }
            }
        }
    }
}


void criterion_4(Check& check)
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260401);
    spmv_oracle<double>(check, rng, 200);
    spmv_oracle<float>(check, rng, 200);
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    check(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
}


struct TestSystems {
    CooMatrix<double> spd;
    CooMatrix<double> nonsym;
};


TestSystems test_systems()
{
    std::mt19937_64 rng(1234);
    auto spd = test::random_spd<double>(rng, 100, 0.05, 1.0);
    auto nonsym = test::random_diag_dominant<double>(rng, 100, 0.1, 1.0);
    return {std::move(spd), std::move(nonsym)};
}


DenseVector<double> rhs(const CooMatrix<double>& a)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseVector<double> b(a.num_rows());
    for (auto& v : b) {
        v = dist(rng);
    }
    return b;
}


void criterion_5(Check& check)
{
    const auto start = std::chrono::steady_clock::now();
    const auto systems = test_systems();
    const std::vector<std::pair<Method, const CooMatrix<double>*>> runs{
        {Method::cg, &systems.spd},
        {Method::bicgstab, &systems.nonsym},
        {Method::cgs, &systems.nonsym},
        {Method::gmres, &systems.nonsym}};
    for (const auto& [method, a] : runs) {
        const auto b = rhs(*a);
        const auto dense = test::to_dense(*a);
        const auto name = std::string(to_string(method));
        for (const auto format : {Format::csr, Format::coo}) {
            for (const auto& exec : executors) {
                SolverConfig config{method, 1000};
                const DenseVector<double> x0(a->num_rows());
                const auto result =
                    format == Format::csr
                        ? solve(coo_to_csr(*a), b, x0, config, exec)
                        : solve(*a, b, x0, config, exec);
                const auto truth = test::dense_relres(dense, result.x, b);
                check(result.converged && result.iterations <= 1000,
                      name + " did not converge");
                check(truth <= 1e-8L,
                      name + " true residual " +
                          std::to_string(double(truth)));
                check(std::abs(truth - result.final_relres) <=
                          10 * std::numeric_limits<double>::epsilon() * 100,
                      name + " reported residual differs from a fresh SpMV");
            }
        }
    }
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    check(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
}


void check_gmres_monotone(Check& check, const SolverResult<double>& r,
                          size_type restart, const std::string& name)
{
    const double eps = std::numeric_limits<double>::epsilon();
    const auto& h = r.residual_history;
    for (size_type k = 0; k + 1 < h.size(); ++k) {
        // step k + 1 opens a new cycle: its predecessor belongs to the old one
        if (k > 0 && k % restart == 0) {
            continue;
        }
        if (h[k + 1] > h[k] * (1 + 4 * eps)) {
            check(false, name + ": residual grows at step " +
                             std::to_string(k + 1));
            return;
        }
    }
}


void criterion_6(Check& check)
{
    const auto systems = test_systems();
    const auto& a = systems.nonsym;
    const auto b = rhs(a);
    const DenseVector<double> x0(a.num_rows());
    SolverConfig full{Method::gmres, 1000};
    full.restart = 1000;
    SolverConfig restarted = full;
    restarted.restart = 5;
    for (const auto& exec : executors) {
        const auto rf = solve(coo_to_csr(a), b, x0, full, exec);
        const auto r5 = solve(coo_to_csr(a), b, x0, restarted, exec);
        check_gmres_monotone(check, rf, full.restart, "full memory");
        check_gmres_monotone(check, r5, restarted.restart, "restart 5");
        check(rf.converged, "full-memory run did not converge");
        check(r5.converged, "restart 5 run did not converge");
        check(r5.outer_iterations >= rf.outer_iterations,
              "restart 5 needed fewer cycles than the full-memory run");
        check(r5.outer_iterations ==
                  (r5.iterations + restarted.restart - 1) / restarted.restart,
              "cycle count does not match the inner steps");
    }
    // a system that needs many cycles
    const auto lap = test::laplacian_2d<double>(12);
    const auto lb = multiply(lap, DenseVector<double>(144, 1.0),
                             Executor::reference());
    const auto lr = solve(lap, lb, DenseVector<double>(144), restarted,
                          Executor::reference());
    check_gmres_monotone(check, lr, restarted.restart, "laplacian");
    check(lr.outer_iterations > 1, "laplacian converged in one cycle");
}


struct Cli {
    int code;
    std::string out;
    std::string err;
};


Cli run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}


void criterion_7(Check& check)
{
    const auto matrix =
        (std::filesystem::path(PSL_TEST_DATA_DIR) / "symmetric.mtx").string();
    const auto spmv = run_cli({"bench-spmv", "--matrix", matrix, "--device",
                               "gen9", "--executor", "parallel"});
    check(spmv.code == 0, "bench-spmv failed: " + spmv.err);
    if (spmv.code == 0) {
        const auto rec = json::parse(spmv.out)["records"][0];
        check(rec["warmups"] == 2, "warmups != 2");
        check(rec["repetitions"] == 10, "repetitions != 10");
        const auto times = rec["times_s"].get<std::vector<double>>();
        check(times.size() == 10, "times_s does not hold 10 entries");
        double sum = 0.0;
        for (const auto t : times) {
            sum += t;
        }
        check(std::abs(rec["mean_time_s"].get<double>() - sum / 10) <=
                  1e-15 * sum,
              "mean is not the mean of the 10 times");
    }

    // converges in a handful of iterations yet must run all 1000
    for (const std::string method : {"cg", "bicgstab", "cgs", "gmres"}) {
        const auto solver = run_cli({"bench-solver", "--matrix", matrix,
                                     "--solver", method, "--device", "gen9"});
        check(solver.code == 0, method + " bench-solver failed: " + solver.err);
        if (solver.code != 0) {
            continue;
        }
        const auto rec = json::parse(solver.out)["records"][0];
        check(rec["iterations"] == 1000,
              method + " iterations != 1000");
        check(rec["flops"] == solver_flops(*parse_method(method), 1000, 5, 13,
                                           100),
              method + " flops do not cover 1000 iterations");
    }
    const auto solve_run = run_cli(
        {"solve", "--matrix", matrix, "--solver", "cg"});
    check(solve_run.code == 0 &&
              json::parse(solve_run.out)["iterations"].get<int>() < 1000,
          "solve does not stop at convergence");
}


/// Generates a general MatrixMarket file on the fly.
class SyntheticMatrix : public std::streambuf {
public:
    SyntheticMatrix(std::string header, std::uint64_t n, std::uint64_t nz)
        : pending_(std::move(header)), n_(n), nz_(nz)
    {
        pending_ += std::to_string(n) + ' ' + std::to_string(n) + ' ' +
                    std::to_string(nz) + '\n';
    }

protected:
    int_type underflow() override
    {
        buffer_.clear();
        buffer_.swap(pending_);
        char line[64];
        while (buffer_.size() < (1 << 16) && written_ < nz_) {
            // entry k of row r sits in column r + 7919 k (mod n)
            const auto r = written_ % n_;
            const auto k = written_ / n_;
            const auto c = (r + k * 7919) % n_;
            const int len = std::snprintf(
                line, sizeof line, "%llu %llu %.3f\n",
                static_cast<unsigned long long>(r + 1),
                static_cast<unsigned long long>(c + 1),
                1.0 + static_cast<double>(k));
            buffer_.append(line, len);
            ++written_;
        }
        if (buffer_.empty()) {
            return traits_type::eof();
        }
        setg(buffer_.data(), buffer_.data(), buffer_.data() + buffer_.size());
        return traits_type::to_int_type(buffer_.front());
    }

private:
    std::string pending_;
    std::string buffer_;
    std::uint64_t n_;
    std::uint64_t nz_;
    std::uint64_t written_{0};
};


void criterion_8(Check& check)
{
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<size_type> dim(1, 80);
    std::uniform_real_distribution<double> density(0.0, 0.4);
    for (int t = 0; t < 100; ++t) {
        const auto md = test::random_coo<double>(rng, dim(rng), dim(rng),
                                                 density(rng));
        const auto mf = test::random_coo<float>(rng, dim(rng), dim(rng),
                                                density(rng));
        check(csr_to_coo(coo_to_csr(md)) == md,
              "f64 round trip " + std::to_string(t));
        check(csr_to_coo(coo_to_csr(mf)) == mf,
              "f32 round trip " + std::to_string(t));
        const auto csr = coo_to_csr(md);
        check(coo_to_csr(csr_to_coo(csr)) == csr,
              "csr round trip " + std::to_string(t));
    }

    const auto sym = read_matrix_market<double>(
        std::filesystem::path(PSL_TEST_DATA_DIR) / "symmetric.mtx");
    // lower triangle of the fixture, 1-based
    const std::vector<std::tuple<int, int, double>> lower{
        {1, 1, 4.0}, {2, 1, -1.5}, {2, 2, 4.0}, {3, 2, -1.0}, {3, 3, 5.0},
        {5, 1, 0.25}, {4, 3, -2.0}, {4, 4, 6.0}, {5, 5, 7.5}};
    test::Dense expected(5, std::vector<long double>(5, 0.0L));
    for (const auto& [i, j, v] : lower) {
        expected[i - 1][j - 1] = v;
        expected[j - 1][i - 1] = v;
    }
    check(test::to_dense(sym.matrix) == expected,
          "symmetric fixture differs from its expansion");
    check(sym.metadata.nz == 13 && sym.metadata.declared_entries == 9,
          "symmetric fixture counts");

    const std::uint64_t n = 4'690'002;
    const std::uint64_t nz = 20'316'253;
    SyntheticMatrix source("%%MatrixMarket matrix coordinate real general\n"
                           "% name: Rajat/rajat31\n"
                           "% kind: circuit simulation problem\n",
                           n, nz);
    std::istream in(&source);
    const auto data = read_matrix_market<double>(in, "synthetic");
    check(data.metadata.name == "rajat31", "name " + data.metadata.name);
    check(data.metadata.origin == "circuit simulation problem",
          "origin " + data.metadata.origin);
    check(data.metadata.n == n, "n " + std::to_string(data.metadata.n));
    check(data.metadata.num_cols == n, "columns");
    check(data.metadata.nz == nz, "nz " + std::to_string(data.metadata.nz));
    check(data.matrix.nnz() == nz, "stored entries");
    check(spmv_flops(data.matrix) == 40'632'506, "flops of one SpMV");
}


void criterion_9(Check& check)
{
    const std::filesystem::path configs(PSL_CONFIG_DIR);
    const auto gen9 = load_device_spec(configs / "gen9.json");
    const auto gen12 = load_device_spec(configs / "gen12.conf");
    check_bounds(check, gen9, gen12, "config files");
    check_roofline(check, gen9, "gen9 file");
    check_roofline(check, gen12, "gen12 file");

    // bench-spmv regenerates the bound from a device file alone
    const auto matrix =
        (std::filesystem::path(PSL_TEST_DATA_DIR) / "general.mtx").string();
    const auto bound = run_cli({"bench-spmv", "--matrix", matrix, "--device",
                                (configs / "gen9.json").string(),
                                "--no-timing", "--format", "coo"});
    check(bound.code == 0, "bench-spmv with a device file: " + bound.err);
    if (bound.code == 0) {
        const auto rec = json::parse(bound.out)["records"][0];
        check(in_range(rec["bound_gflops"].get<double>(), 4.62, 4.63),
              "COO f64 bound line from the device file");
    }

    // fraction of peak on this machine
    const auto exec = Executor::parallel(0);
    const auto local =
        measure_local_device(exec, default_stream_length(Precision::f64));
    const auto fraction_ok = [](double f) { return f > 0.0 && f <= 1.0; };
    const auto stream = run_cli({"bench-stream", "--executor", "parallel"});
    check(stream.code == 0, "bench-stream on the local device: " + stream.err);
    if (stream.code == 0) {
        const auto doc = json::parse(stream.out);
        for (const auto& rec : doc["records"]) {
            const auto f = rec["fraction_of_peak_bw"].get<double>();
            std::cout << "  local " << rec["kernel"].get<std::string>() << ": "
                      << rec["achieved_gbs"].get<double>()
                      << " GB/s, fraction " << f << '\n';
            check(fraction_ok(f), "stream fraction " + std::to_string(f));
        }
    }
    const auto lap = test::laplacian_2d<double>(2000);
    MatrixMetadata meta{"laplacian_2000", "five-point stencil", lap.num_rows(),
                        lap.num_cols(), lap.nnz(), lap.nnz(), "general"};
    for (const auto format : {Format::csr, Format::coo}) {
        const auto r = benchmark_spmv(lap, meta, format, exec, local);
        std::cout << "  local spmv " << to_string(format) << ": "
                  << r.achieved_gbs << " GB/s, " << r.gflops
                  << " GFLOP/s, fraction " << r.fraction_of_peak_bw << '\n';
        check(fraction_ok(r.fraction_of_peak_bw),
              "spmv fraction " + std::to_string(r.fraction_of_peak_bw));
    }
}


}  // namespace


int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>>
        criteria{{"arithmetic intensity", criterion_1},
                 {"roofline bounds", criterion_2},
                 {"roofline shape", criterion_3},
                 {"spmv oracle equivalence", criterion_4},
                 {"solver correctness", criterion_5},
                 {"gmres properties", criterion_6},
                 {"benchmark protocol", criterion_7},
                 {"round trip and ingestion", criterion_8},
                 {"bounds from config, local fraction of peak", criterion_9}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const auto elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const bool ok = check.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << criteria[i].first << " (" << elapsed << " s)\n";
        for (const auto& f : check.failures) {
            std::cout << "  " << f << '\n';
        }
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
