// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/report.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include <psl/core/error.hpp>


namespace psl {
namespace {


using json = nlohmann::ordered_json;


void check_finite(double v, std::string_view field)
{
    if (!std::isfinite(v)) {
        throw SerializationError("non-finite value in field '" +
                                 std::string(field) + "'");
    }
}


json device_to_json(const DeviceSpec& d)
{
    check_finite(d.theoretical_bandwidth_gbs, "theoretical_bandwidth_gbs");
    check_finite(d.measured_bandwidth_gbs, "measured_bandwidth_gbs");
    json peaks = json::object();
    for (const auto& [p, v] : d.peak_gflops) {
        check_finite(v, "peak_gflops");
        peaks[std::string(to_string(p))] = v;
    }
    return json{{"name", d.name},
                {"theoretical_bandwidth_gbs", d.theoretical_bandwidth_gbs},
                {"measured_bandwidth_gbs", d.measured_bandwidth_gbs},
                {"peak_gflops", std::move(peaks)}};
}


json matrix_to_json(const MatrixMetadata& m)
{
    return json{{"name", m.name},
                {"origin", m.origin},
                {"n", m.n},
                {"num_cols", m.num_cols},
                {"nz", m.nz},
                {"declared_entries", m.declared_entries},
                {"symmetry", m.symmetry}};
}


struct Bounds {
    std::optional<Ratio> ai;
    double bound{};
    double attainable{};
};


Bounds bounds_of(const BenchmarkRecord& r, const RooflineModel& model)
{
    Bounds b;
    if (!r.format) {
        return b;
    }
    b.ai = arithmetic_intensity(*r.format, r.precision);
    b.bound = spmv_bound(model.device.measured_bandwidth_gbs, *b.ai);
    if (model.device.peak_gflops.contains(r.precision)) {
        b.attainable =
            RooflineModel{model.device, r.precision}.attainable(b.ai->value());
    } else {
        b.attainable = b.bound;
    }
    return b;
}


template <typename V>
json optional_json(const std::optional<V>& v)
{
    return v ? json(*v) : json(nullptr);
}


json record_to_json(const BenchmarkRecord& r, const RooflineModel& model)
{
    for (const auto t : r.times_s) {
        check_finite(t, "times_s");
    }
    check_finite(r.mean_time_s, "mean_time_s");
    check_finite(r.gflops, "gflops");
    check_finite(r.achieved_gbs, "achieved_gbs");
    check_finite(r.achieved_gbs_simplified, "achieved_gbs_simplified");
    check_finite(r.fraction_of_peak_bw, "fraction_of_peak_bw");
    check_finite(r.fraction_of_theoretical_bw, "fraction_of_theoretical_bw");
    const auto b = bounds_of(r, model);
    json out;
    out["kernel"] = r.kernel;
    out["matrix"] = r.matrix ? matrix_to_json(*r.matrix) : json(nullptr);
    out["precision"] = to_string(r.precision);
    out["format"] =
        r.format ? json(std::string(to_string(*r.format))) : json(nullptr);
    out["executor"] = r.executor;
    out["threads"] = r.threads;
    out["warmups"] = r.warmups;
    out["repetitions"] = r.repetitions;
    out["times_s"] = r.times_s;
    out["mean_time_s"] = r.mean_time_s;
    out["flops"] = r.flops;
    out["bytes"] = r.bytes;
    out["bytes_simplified"] = r.bytes_simplified;
    out["gflops"] = r.gflops;
    out["achieved_gbs"] = r.achieved_gbs;
    out["achieved_gbs_simplified"] = r.achieved_gbs_simplified;
    out["fraction_of_peak_bw"] = r.fraction_of_peak_bw;
    out["fraction_of_peak_bw_baseline"] = "measured_bandwidth_gbs";
    out["fraction_of_theoretical_bw"] = r.fraction_of_theoretical_bw;
    out["iterations"] = optional_json(r.iterations);
    out["converged"] = optional_json(r.converged);
    out["breakdown"] = optional_json(r.breakdown);
    out["notes"] = r.notes;
    if (b.ai) {
        out["arithmetic_intensity"] = json{{"flops", b.ai->num},
                                           {"bytes", b.ai->den},
                                           {"value", b.ai->value()}};
        out["bound_gflops"] = b.bound;
        out["attainable_gflops"] = b.attainable;
    } else {
        out["arithmetic_intensity"] = nullptr;
        out["bound_gflops"] = nullptr;
        out["attainable_gflops"] = nullptr;
    }
    return out;
}


std::string number(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}


std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (const auto c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}


constexpr std::string_view csv_header =
    "kernel,matrix,n,nz,precision,format,executor,threads,warmups,"
    "repetitions,times_s,mean_time_s,flops,bytes,bytes_simplified,gflops,"
    "achieved_gbs,achieved_gbs_simplified,fraction_of_peak_bw,"
    "fraction_of_theoretical_bw,iterations,converged,breakdown,"
    "arithmetic_intensity,bound_gflops,attainable_gflops,notes";


std::string emit_csv(const std::vector<BenchmarkRecord>& records,
                     const RooflineModel& model)
{
    std::ostringstream out;
    out << csv_header << '\n';
    for (const auto& r : records) {
        // validates the same fields the JSON writer does
        record_to_json(r, model);
        const auto b = bounds_of(r, model);
        std::string times;
        for (std::size_t i = 0; i < r.times_s.size(); ++i) {
            times += (i ? ";" : "") + number(r.times_s[i]);
        }
        out << csv_field(r.kernel) << ','
            << (r.matrix ? csv_field(r.matrix->name) : "") << ','
            << (r.matrix ? std::to_string(r.matrix->n) : "") << ','
            << (r.matrix ? std::to_string(r.matrix->nz) : "") << ','
            << to_string(r.precision) << ','
            << (r.format ? to_string(*r.format) : "") << ','
            << csv_field(r.executor) << ',' << r.threads << ',' << r.warmups
            << ',' << r.repetitions << ',' << times << ','
            << number(r.mean_time_s) << ',' << r.flops << ',' << r.bytes
            << ',' << r.bytes_simplified << ',' << number(r.gflops) << ','
            << number(r.achieved_gbs) << ','
            << number(r.achieved_gbs_simplified) << ','
            << number(r.fraction_of_peak_bw) << ','
            << number(r.fraction_of_theoretical_bw) << ','
            << (r.iterations ? std::to_string(*r.iterations) : "") << ','
            << (r.converged ? (*r.converged ? "true" : "false") : "") << ','
            << (r.breakdown ? csv_field(*r.breakdown) : "") << ','
            << (b.ai ? number(b.ai->value()) : "") << ','
            << (b.ai ? number(b.bound) : "") << ','
            << (b.ai ? number(b.attainable) : "") << ','
            << csv_field(r.notes) << '\n';
    }
    return out.str();
}


MatrixMetadata matrix_from_json(const json& j)
{
    MatrixMetadata m;
    m.name = j.at("name").get<std::string>();
    m.origin = j.at("origin").get<std::string>();
    m.n = j.at("n").get<std::uint64_t>();
    m.num_cols = j.at("num_cols").get<std::uint64_t>();
    m.nz = j.at("nz").get<std::uint64_t>();
    m.declared_entries = j.at("declared_entries").get<std::uint64_t>();
    m.symmetry = j.at("symmetry").get<std::string>();
    return m;
}


Precision precision_from_json(const json& j)
{
    const auto p = parse_precision(j.get<std::string>());
    if (!p) {
        throw SerializationError("unknown precision '" +
                                 j.get<std::string>() + "'");
    }
    return *p;
}


BenchmarkRecord record_from_json(const json& j)
{
    BenchmarkRecord r;
    r.kernel = j.at("kernel").get<std::string>();
    if (!j.at("matrix").is_null()) {
        r.matrix = matrix_from_json(j.at("matrix"));
    }
    r.precision = precision_from_json(j.at("precision"));
    if (!j.at("format").is_null()) {
        const auto f = parse_format(j.at("format").get<std::string>());
        if (!f) {
            throw SerializationError("unknown format");
        }
        r.format = *f;
    }
    r.executor = j.at("executor").get<std::string>();
    r.threads = j.at("threads").get<int>();
    r.warmups = j.at("warmups").get<size_type>();
    r.repetitions = j.at("repetitions").get<size_type>();
    r.times_s = j.at("times_s").get<std::vector<double>>();
    r.mean_time_s = j.at("mean_time_s").get<double>();
    r.flops = j.at("flops").get<std::uint64_t>();
    r.bytes = j.at("bytes").get<std::uint64_t>();
    r.bytes_simplified = j.at("bytes_simplified").get<std::uint64_t>();
    r.gflops = j.at("gflops").get<double>();
    r.achieved_gbs = j.at("achieved_gbs").get<double>();
    r.achieved_gbs_simplified = j.at("achieved_gbs_simplified").get<double>();
    r.fraction_of_peak_bw = j.at("fraction_of_peak_bw").get<double>();
    r.fraction_of_theoretical_bw =
        j.at("fraction_of_theoretical_bw").get<double>();
    if (!j.at("iterations").is_null()) {
        r.iterations = j.at("iterations").get<std::uint64_t>();
    }
    if (!j.at("converged").is_null()) {
        r.converged = j.at("converged").get<bool>();
    }
    if (!j.at("breakdown").is_null()) {
        r.breakdown = j.at("breakdown").get<std::string>();
    }
    r.notes = j.at("notes").get<std::string>();
    return r;
}


}  // namespace


std::string_view to_string(ReportFormat f) noexcept
{
    return f == ReportFormat::json ? "json" : "csv";
}


std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept
{
    if (s == "json") {
        return ReportFormat::json;
    }
    if (s == "csv") {
        return ReportFormat::csv;
    }
    return std::nullopt;
}


std::string emit_report(const std::vector<BenchmarkRecord>& records,
                        const RooflineModel& model, ReportFormat format)
{
    if (format == ReportFormat::csv) {
        return emit_csv(records, model);
    }
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["device"] = device_to_json(model.device);
    doc["precision"] = to_string(model.precision);
    doc["records"] = json::array();
    for (const auto& r : records) {
        doc["records"].push_back(record_to_json(r, model));
    }
    try {
        return doc.dump(2) + "\n";
    } catch (const json::exception& e) {
        throw SerializationError(e.what());
    }
}


Report parse_report(std::string_view text)
{
    try {
        const auto doc = json::parse(text);
        Report report;
        report.schema_version = doc.at("schema_version").get<int>();
        if (report.schema_version != report_schema_version) {
            throw SerializationError("unsupported schema_version " +
                                     std::to_string(report.schema_version));
        }
        const auto& d = doc.at("device");
        report.device.name = d.at("name").get<std::string>();
        report.device.theoretical_bandwidth_gbs =
            d.at("theoretical_bandwidth_gbs").get<double>();
        report.device.measured_bandwidth_gbs =
            d.at("measured_bandwidth_gbs").get<double>();
        for (const auto& [key, value] : d.at("peak_gflops").items()) {
            report.device.peak_gflops[precision_from_json(json(key))] =
                value.get<double>();
        }
        report.precision = precision_from_json(doc.at("precision"));
        for (const auto& r : doc.at("records")) {
            report.records.push_back(record_from_json(r));
        }
        return report;
    } catch (const json::exception& e) {
        throw SerializationError(std::string("report: ") + e.what());
    }
}


}  // namespace psl
