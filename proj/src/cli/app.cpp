// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/cli/app.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <psl/core/error.hpp>
#include <psl/core/executor.hpp>
#include <psl/formats/conversion.hpp>
#include <psl/formats/footprint.hpp>
#include <psl/formats/matrix_market.hpp>
#include <psl/perfmodel/device.hpp>
#include <psl/perfmodel/harness.hpp>
#include <psl/perfmodel/report.hpp>
#include <psl/perfmodel/roofline.hpp>
#include <psl/perfmodel/stream.hpp>
#include <psl/solvers/solver.hpp>
#include <psl/spmv/spmv.hpp>


namespace psl::cli {
namespace {


using json = nlohmann::ordered_json;


class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};


struct CliConfig {
    std::string subcommand;
    std::string matrix_path;
    std::string format{"csr"};
    std::string precision{"f64"};
    std::string executor{"reference"};
    int threads{0};
    std::string solver;
    size_type iters{1000};
    size_type warmups{2};
    size_type reps{10};
    size_type restart{100};
    std::optional<double> tol;
    std::string output{"json"};
    std::string device{"local"};
    std::string out_path;
    bool no_timing{false};
    std::string kernel{"all"};
    size_type len{0};
    bool sweep{false};
    bool threads_given{false};
};


/// Parsed and cross-checked view of a CliConfig.
struct Settings {
    CliConfig cli;
    Format format{Format::csr};
    Precision precision{Precision::f64};
    Executor exec{Executor::reference()};
    std::optional<Method> method;
    ReportFormat output{ReportFormat::json};
    Protocol protocol;
};


void build_parser(CLI::App& app, CliConfig& c)
{
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--matrix", c.matrix_path, "MatrixMarket input file");
    app.add_option("--format", c.format, "Sparse format")
        ->check(CLI::IsMember({"csr", "coo"}));
    app.add_option("--precision", c.precision, "Value precision")
        ->check(CLI::IsMember({"f32", "f64"}));
    app.add_option("--executor", c.executor, "Kernel backend")
        ->check(CLI::IsMember({"reference", "parallel"}));
    app.add_option("--threads", c.threads,
                   "Threads of the parallel executor (0: all available)");
    app.add_option("--solver", c.solver, "Krylov method")
        ->check(CLI::IsMember({"cg", "bicgstab", "cgs", "gmres"}));
    app.add_option("--iters", c.iters, "Solver iterations (limit for solve)");
    app.add_option("--warmups", c.warmups, "Untimed warm-up launches");
    app.add_option("--reps", c.reps, "Timed repetitions");
    app.add_option("--restart", c.restart, "GMRES restart length");
    app.add_option("--tol", c.tol,
                   "Relative residual tolerance (default 1e-8 for f64, 1e-5 "
                   "for f32)");
    app.add_option("--output", c.output, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--device", c.device,
                   "Device for bounds and fractions: local, gen9, gen12 or a "
                   "spec file");
    app.add_option("--out", c.out_path, "Write the report to this file");
    app.add_flag("--no-timing", c.no_timing,
                 "Record all times as zero (byte-stable reports)");
    app.add_option("--kernel", c.kernel, "Stream kernel")
        ->check(CLI::IsMember({"all", "copy", "mul", "add", "triad", "dot"}));
    app.add_option("--len", c.len,
                   "Stream array length (0: four times the last-level cache)");
    app.add_flag("--sweep", c.sweep,
                 "Sweep stream array lengths over powers of two from 2^15");

    const auto add = [&](const char* name, const char* description) {
        app.add_subcommand(name, description)
            ->fallthrough()
            ->footer("All options of psl --help apply.")
            ->callback([&c, name] { c.subcommand = name; });
    };
    add("convert", "Convert a MatrixMarket file to CSR or COO arrays");
    add("solve", "Solve A x = A 1 to the tolerance");
    add("bench-stream", "Run the stream bandwidth kernels");
    add("bench-spmv", "Time SpMV on a matrix");
    add("bench-solver", "Time a fixed number of solver iterations");
}


Settings check(CliConfig c, const CLI::App& app)
{
    Settings s;
    c.threads_given = app.get_option("--threads")->count() > 0;
    const auto given = [&](const char* name) {
        return app.get_option(name)->count() > 0;
    };
    const auto& cmd = c.subcommand;
    const bool needs_matrix = cmd != "bench-stream";
    const bool uses_solver = cmd == "solve" || cmd == "bench-solver";
    if (needs_matrix && c.matrix_path.empty()) {
        throw UsageError(cmd + " requires --matrix");
    }
    if (!needs_matrix && given("--matrix")) {
        throw UsageError("bench-stream does not take --matrix");
    }
    if (uses_solver && c.solver.empty()) {
        throw UsageError(cmd + " requires --solver");
    }
    if (!uses_solver) {
        for (const auto name : {"--solver", "--restart", "--tol"}) {
            if (given(name)) {
                throw UsageError(std::string(name) + " only applies to solve "
                                                     "and bench-solver");
            }
        }
    }
    if (cmd != "bench-stream") {
        for (const auto name : {"--kernel", "--sweep"}) {
            if (given(name)) {
                throw UsageError(std::string(name) +
                                 " only applies to bench-stream");
            }
        }
    }
    if (cmd == "convert" || cmd == "solve") {
        for (const auto name : {"--warmups", "--reps", "--device",
                                "--no-timing", "--len"}) {
            if (given(name)) {
                throw UsageError(std::string(name) + " does not apply to " +
                                 cmd);
            }
        }
    }
    if (cmd == "bench-solver" && (given("--warmups") || given("--reps"))) {
        throw UsageError("bench-solver runs one warm-up segment and one "
                         "timed run; use --iters");
    }
    if (c.iters < 1 || c.reps < 1 || c.restart < 1) {
        throw UsageError("--iters, --reps and --restart must be at least 1");
    }
    if (c.tol && !(*c.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    if (c.threads < 0) {
        throw UsageError("--threads must not be negative");
    }
    if (c.executor == "reference" && c.threads_given && c.threads != 1) {
        throw UsageError("--threads requires --executor parallel");
    }
    if (c.no_timing && c.device == "local") {
        throw UsageError("--no-timing needs --device gen9, gen12 or a spec "
                         "file; the local device is measured");
    }

    s.format = *parse_format(c.format);
    s.precision = *parse_precision(c.precision);
    s.exec = c.executor == "parallel" ? Executor::parallel(c.threads)
                                      : Executor::reference();
    if (!c.solver.empty()) {
        s.method = parse_method(c.solver);
    }
    s.output = *parse_report_format(c.output);
    s.protocol = Protocol{c.warmups, c.reps, !c.no_timing};
    s.cli = std::move(c);
    return s;
}


size_type stream_length(const Settings& s)
{
    return s.cli.len > 0 ? s.cli.len : default_stream_length(s.precision);
}


DeviceSpec resolve_device(const Settings& s)
{
    if (s.cli.device == "local") {
        return measure_local_device(s.exec, stream_length(s), s.protocol);
    }
    if (const auto preset = preset_device(s.cli.device)) {
        return *preset;
    }
    return load_device_spec(s.cli.device);
}


json metadata_json(const MatrixMetadata& m)
{
    return json{{"name", m.name},
                {"origin", m.origin},
                {"n", m.n},
                {"num_cols", m.num_cols},
                {"nz", m.nz},
                {"declared_entries", m.declared_entries},
                {"symmetry", m.symmetry}};
}


std::string json_text(const json& doc) { return doc.dump(2) + "\n"; }


template <Scalar T>
std::string convert(const Settings& s)
{
    const auto data = read_matrix_market<T>(s.cli.matrix_path);
    const auto& coo = data.matrix;
    const auto nz = static_cast<std::uint64_t>(coo.nnz());
    if (s.output == ReportFormat::csv) {
        std::ostringstream out;
        out.precision(std::numeric_limits<T>::max_digits10);
        out << "row,col,value\n";
        for (size_type k = 0; k < coo.nnz(); ++k) {
            out << coo.row_idxs()[k] << ',' << coo.col_idxs()[k] << ','
                << coo.values()[k] << '\n';
        }
        return out.str();
    }
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["matrix"] = metadata_json(data.metadata);
    doc["format"] = to_string(s.format);
    doc["precision"] = to_string(s.precision);
    doc["footprint_bytes"] = {
        {"simplified", footprint_bytes(s.format, nz, s.precision,
                                       FootprintMode::simplified)},
        {"full", footprint_bytes(s.format, nz, s.precision,
                                 FootprintMode::full, coo.num_rows(),
                                 coo.num_cols())}};
    doc["num_rows"] = coo.num_rows();
    doc["num_cols"] = coo.num_cols();
    if (s.format == Format::csr) {
        const auto csr = coo_to_csr(coo);
        doc["row_ptrs"] = csr.row_ptrs();
        doc["col_idxs"] = csr.col_idxs();
        doc["values"] = csr.values();
    } else {
        doc["row_idxs"] = coo.row_idxs();
        doc["col_idxs"] = coo.col_idxs();
        doc["values"] = coo.values();
    }
    return json_text(doc);
}


template <Scalar T>
std::string solve_command(const Settings& s, int& code)
{
    const auto data = read_matrix_market<T>(s.cli.matrix_path);
    SolverConfig config;
    config.method = *s.method;
    config.max_iters = s.cli.iters;
    config.restart = s.cli.restart;
    config.rel_tol = s.cli.tol;
    config.validate();
    const auto tol = config.tolerance(s.precision);
    const auto run = [&](const auto& a) {
        const auto b =
            multiply(a, DenseVector<T>(a.num_cols(), T{1}), s.exec);
        return solve(a, b, DenseVector<T>(a.num_rows()), config, s.exec);
    };
    const auto result = s.format == Format::csr
                            ? run(coo_to_csr(data.matrix))
                            : run(data.matrix);
    if (result.breakdown && !result.converged) {
        code = exit_breakdown;
    }
    const std::optional<std::string> breakdown =
        result.breakdown
            ? std::optional<std::string>(to_string(*result.breakdown))
            : std::nullopt;
    if (s.output == ReportFormat::csv) {
        std::ostringstream out;
        out.precision(17);
        out << "matrix,method,precision,format,executor,threads,tolerance,"
               "iterations,outer_iterations,final_relres,converged,"
               "breakdown,flops\n";
        out << data.metadata.name << ',' << to_string(*s.method) << ','
            << to_string(s.precision) << ',' << to_string(s.format) << ','
            << s.exec.name() << ',' << s.exec.thread_count() << ',' << tol
            << ',' << result.iterations << ',' << result.outer_iterations
            << ',' << result.final_relres << ','
            << (result.converged ? "true" : "false") << ','
            << breakdown.value_or("") << ',' << result.flops << '\n';
        return out.str();
    }
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["matrix"] = metadata_json(data.metadata);
    doc["method"] = to_string(*s.method);
    doc["precision"] = to_string(s.precision);
    doc["format"] = to_string(s.format);
    doc["executor"] = s.exec.name();
    doc["threads"] = s.exec.thread_count();
    doc["tolerance"] = tol;
    doc["max_iters"] = config.max_iters;
    doc["restart"] = config.restart;
    doc["iterations"] = result.iterations;
    doc["outer_iterations"] = result.outer_iterations;
    doc["final_relres"] = result.final_relres;
    doc["converged"] = result.converged;
    doc["breakdown"] = breakdown ? json(*breakdown) : json(nullptr);
    doc["flops"] = result.flops;
    doc["residual_history"] = result.residual_history;
    doc["x"] = result.x.values();
    return json_text(doc);
}


std::string bench_stream(const Settings& s)
{
    std::vector<StreamKernel> kernels;
    if (s.cli.kernel == "all") {
        kernels = {StreamKernel::copy, StreamKernel::mul, StreamKernel::add,
                   StreamKernel::triad, StreamKernel::dot};
    } else {
        kernels = {*parse_stream_kernel(s.cli.kernel)};
    }
    const auto lengths =
        s.cli.sweep ? stream_sweep_lengths(s.cli.len > 0 ? s.cli.len
                                                         : size_type{1} << 27)
                    : std::vector<size_type>{stream_length(s)};
    if (lengths.empty()) {
        throw InvalidArgument("--len is below the smallest sweep length");
    }
    std::vector<BenchmarkRecord> records;
    for (const auto len : lengths) {
        for (const auto k : kernels) {
            records.push_back(
                run_stream(k, len, s.precision, s.protocol, s.exec));
        }
    }
    DeviceSpec device;
    if (s.cli.device == "local") {
        // bandwidth of this very run at the largest length
        double best = 0.0;
        for (const auto& r : records) {
            if (r.kernel != "stream_dot" &&
                r.notes == "array_len=" + std::to_string(lengths.back())) {
                best = std::max(best, r.achieved_gbs);
            }
        }
        if (best > 0.0) {
            device.name = "local (" + std::string(s.exec.name()) + ", " +
                          std::to_string(s.exec.thread_count()) + " threads)";
            device.measured_bandwidth_gbs = best;
            device.theoretical_bandwidth_gbs = best;
            for (const auto p : {Precision::f32, Precision::f64}) {
                device.peak_gflops[p] = estimate_peak_gflops(p, s.exec);
            }
            device.validate();
        } else {
            device = resolve_device(s);
        }
    } else {
        device = resolve_device(s);
    }
    for (auto& r : records) {
        finalize_record(r, &device);
    }
    return emit_report(records, RooflineModel{device, s.precision},
                       s.output);
}


template <Scalar T>
std::string bench_spmv(const Settings& s)
{
    const auto data = read_matrix_market<T>(s.cli.matrix_path);
    const auto device = resolve_device(s);
    const std::vector<BenchmarkRecord> records{
        benchmark_spmv(data.matrix, data.metadata, s.format, s.exec, device,
                       s.protocol)};
    return emit_report(records, RooflineModel{device, s.precision},
                       s.output);
}


template <Scalar T>
std::string bench_solver(const Settings& s, int& code)
{
    const auto data = read_matrix_market<T>(s.cli.matrix_path);
    const auto device = resolve_device(s);
    SolverBenchmark options;
    options.method = *s.method;
    options.iterations = s.cli.iters;
    options.restart = s.cli.restart;
    options.timing = s.protocol.timing;
    const std::vector<BenchmarkRecord> records{benchmark_solver(
        data.matrix, data.metadata, s.format, s.exec, device, options)};
    const auto& r = records.front();
    if (r.breakdown && !r.converged.value_or(false)) {
        code = exit_breakdown;
    }
    return emit_report(records, RooflineModel{device, s.precision},
                       s.output);
}


template <Scalar T>
std::string dispatch_command(const Settings& s, int& code)
{
    const auto& cmd = s.cli.subcommand;
    if (cmd == "convert") {
        return convert<T>(s);
    }
    if (cmd == "solve") {
        return solve_command<T>(s, code);
    }
    if (cmd == "bench-stream") {
        return bench_stream(s);
    }
    if (cmd == "bench-spmv") {
        return bench_spmv<T>(s);
    }
    return bench_solver<T>(s, code);
}


int exit_code_of(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::unknown_operation:
        return exit_usage;
    case ErrorCode::parse_error:
    case ErrorCode::unsupported_field:
    case ErrorCode::index_out_of_range:
    case ErrorCode::overflow:
    case ErrorCode::io_error:
        return exit_ingestion;
    case ErrorCode::validation_failed:
    case ErrorCode::serialization_error:
        return exit_runtime;
    }
    return exit_runtime;
}


}  // namespace


int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Sparse SpMV, Krylov solver and roofline benchmark tool",
                 "psl"};
    CliConfig config;
    build_parser(app, config);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    std::string report;
    int code = exit_ok;
    try {
        const auto settings = check(config, app);
        report = settings.precision == Precision::f32
                     ? dispatch_command<float>(settings, code)
                     : dispatch_command<double>(settings, code);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_of(e.code());
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return exit_runtime;
    }

    if (config.out_path.empty()) {
        out << report;
        out.flush();
    } else {
        std::ofstream file(config.out_path, std::ios::binary);
        file << report;
        file.close();
        if (!file) {
            err << "error: io_error: cannot write '" << config.out_path
                << "'\n";
            return exit_runtime;
        }
    }
    if (code == exit_breakdown) {
        err << "error: solver breakdown before convergence\n";
    }
    return code;
}


}  // namespace psl::cli
