// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/device.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <psl/core/error.hpp>


namespace psl {
namespace {


std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}


double parse_rate(std::string_view key, std::string_view value,
                  std::size_t line)
{
    double out{};
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParseError(line, "expected a number for '" + std::string(key) +
                                   "', got '" + std::string(value) + "'");
    }
    return out;
}


DeviceSpec parse_json_spec(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("device spec: ") + e.what());
    }
    DeviceSpec spec;
    try {
        spec.name = doc.value("name", std::string{"unnamed"});
        spec.theoretical_bandwidth_gbs =
            doc.at("theoretical_bandwidth_gbs").get<double>();
        spec.measured_bandwidth_gbs =
            doc.at("measured_bandwidth_gbs").get<double>();
        for (const auto& [key, value] : doc.at("peak_gflops").items()) {
            const auto p = parse_precision(key);
            if (!p) {
                throw ParseError(0, "device spec: unknown precision '" + key +
                                        "'");
            }
            spec.peak_gflops[*p] = value.get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("device spec: ") + e.what());
    }
    return spec;
}


DeviceSpec parse_key_value_spec(std::string_view text)
{
    DeviceSpec spec;
    spec.name = "unnamed";
    bool have_theoretical = false;
    bool have_measured = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "name") {
            spec.name = std::string(value);
        } else if (key == "theoretical_bandwidth_gbs") {
            spec.theoretical_bandwidth_gbs = parse_rate(key, value, line_no);
            have_theoretical = true;
        } else if (key == "measured_bandwidth_gbs") {
            spec.measured_bandwidth_gbs = parse_rate(key, value, line_no);
            have_measured = true;
        } else if (key == "peak_gflops_f32") {
            spec.peak_gflops[Precision::f32] = parse_rate(key, value, line_no);
        } else if (key == "peak_gflops_f64") {
            spec.peak_gflops[Precision::f64] = parse_rate(key, value, line_no);
        } else {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_theoretical || !have_measured) {
        throw ParseError(0, "device spec needs theoretical_bandwidth_gbs and "
                            "measured_bandwidth_gbs");
    }
    return spec;
}


}  // namespace


double DeviceSpec::peak(Precision p) const
{
    const auto it = peak_gflops.find(p);
    if (it == peak_gflops.end()) {
        throw InvalidArgument("device '" + name + "' has no " +
                              std::string(to_string(p)) + " peak");
    }
    return it->second;
}


void DeviceSpec::validate() const
{
    const auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    if (!positive(theoretical_bandwidth_gbs) ||
        !positive(measured_bandwidth_gbs)) {
        throw InvalidArgument("device '" + name +
                              "': bandwidths must be positive");
    }
    if (peak_gflops.empty()) {
        throw InvalidArgument("device '" + name + "': no peak FLOP rate");
    }
    for (const auto& [p, rate] : peak_gflops) {
        if (!positive(rate)) {
            throw InvalidArgument("device '" + name + "': " +
                                  std::string(to_string(p)) +
                                  " peak must be positive");
        }
    }
    if (measured_bandwidth_gbs > 1.05 * theoretical_bandwidth_gbs) {
        throw InvalidArgument("device '" + name +
                              "': measured bandwidth exceeds 1.05x the "
                              "theoretical bandwidth");
    }
}


DeviceSpec gen9_device()
{
    return {"Intel UHD Graphics P630 (Gen9)",
            41.6,
            37.0,
            {{Precision::f32, 430.0}, {Precision::f64, 105.0}}};
}


DeviceSpec gen12_device()
{
    return {"Intel Iris Xe Max (Gen12)",
            68.0,
            58.0,
            {{Precision::f32, 2200.0}, {Precision::f64, 8.0}}};
}


std::optional<DeviceSpec> preset_device(std::string_view name)
{
    if (name == "gen9") {
        return gen9_device();
    }
    if (name == "gen12") {
        return gen12_device();
    }
    return std::nullopt;
}


DeviceSpec parse_device_spec(std::string_view text)
{
    const auto body = trim(text);
    auto spec = !body.empty() && body.front() == '{' ? parse_json_spec(body)
                                                     : parse_key_value_spec(body);
    spec.validate();
    return spec;
}


DeviceSpec load_device_spec(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open device spec '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_device_spec(text.str());
}


}  // namespace psl
