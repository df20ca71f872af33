// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <psl/core/types.hpp>


namespace psl {


/**
 * Bandwidth and compute limits of a device.
 *
 * Rates are in GB/s (1e9 bytes) and GFLOP/s. The measured bandwidth is the
 * baseline of fraction-of-peak figures; it may not exceed the theoretical
 * one by more than 5 %.
 */
struct DeviceSpec {
    std::string name;
    double theoretical_bandwidth_gbs{};
    double measured_bandwidth_gbs{};
    std::map<Precision, double> peak_gflops;

    /// Throws InvalidArgument if no peak is known for `p`.
    double peak(Precision p) const;

    /// Throws InvalidArgument on a non-positive rate or a measured
    /// bandwidth above 1.05x the theoretical one.
    void validate() const;

    friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;
};


/// Intel UHD Graphics P630: 41.6 GB/s theoretical, 37 GB/s measured,
/// 105 / 430 GFLOP/s in f64 / f32.
DeviceSpec gen9_device();

/// Intel Iris Xe Max: 68 GB/s theoretical, 58 GB/s measured, 8 GFLOP/s f64
/// (emulated), 2.2 TFLOP/s f32.
DeviceSpec gen12_device();

/// "gen9" or "gen12"
std::optional<DeviceSpec> preset_device(std::string_view name);

/**
 * Parses a device description, either a JSON object
 *
 *   {"name": "...", "theoretical_bandwidth_gbs": 41.6,
 *    "measured_bandwidth_gbs": 37, "peak_gflops": {"f64": 105, "f32": 430}}
 *
 * or key=value lines (# starts a comment):
 *
 *   name = ...
 *   theoretical_bandwidth_gbs = 41.6
 *   measured_bandwidth_gbs = 37
 *   peak_gflops_f64 = 105
 *   peak_gflops_f32 = 430
 *
 * The result is validated. Throws ParseError or InvalidArgument.
 */
DeviceSpec parse_device_spec(std::string_view text);

/// Throws IoError if the file cannot be read.
DeviceSpec load_device_spec(const std::filesystem::path& path);


}  // namespace psl
