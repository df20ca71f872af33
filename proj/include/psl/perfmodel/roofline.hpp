// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>

#include <psl/core/types.hpp>
#include <psl/formats/footprint.hpp>
#include <psl/perfmodel/device.hpp>


namespace psl {


/// Exact non-negative fraction, kept in lowest terms.
struct Ratio {
    std::uint64_t num{};
    std::uint64_t den{1};

    static constexpr Ratio reduced(std::uint64_t num, std::uint64_t den)
    {
        const auto g = std::gcd(num, den);
        return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
    }

    constexpr double value() const noexcept
    {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    friend constexpr bool operator==(Ratio, Ratio) = default;
};


/// FLOP per byte of an SpMV under the simplified footprint:
/// 2 / footprint_bytes(format, 1, precision, simplified).
Ratio arithmetic_intensity(Format format, Precision precision);

/// GFLOP/s an SpMV can reach at `bandwidth_gbs` and intensity `ai`.
double spmv_bound(double bandwidth_gbs, double ai);

inline double spmv_bound(double bandwidth_gbs, Ratio ai)
{
    return spmv_bound(bandwidth_gbs, ai.value());
}


/// Two-segment roofline of one device at one precision.
struct RooflineModel {
    DeviceSpec device;
    Precision precision{Precision::f64};

    /// min(peak, measured bandwidth * ai)
    double attainable(double ai) const;

    /// Intensity where the bandwidth and compute roofs meet.
    double ridge_point() const;
};

inline double attainable(const RooflineModel& model, double ai)
{
    return model.attainable(ai);
}


}  // namespace psl
