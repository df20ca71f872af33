// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <psl/core/types.hpp>
#include <psl/formats/footprint.hpp>
#include <psl/formats/matrix_market.hpp>
#include <psl/perfmodel/device.hpp>


namespace psl {


/// Timing protocol: untimed warm-up launches followed by individually timed
/// repetitions.
struct Protocol {
    size_type warmups{2};
    size_type repetitions{10};
    /// false records every time as 0 (and all rates as 0) so that reports
    /// are byte-stable
    bool timing{true};
};


/// One timed experiment.
struct BenchmarkRecord {
    std::string kernel;
    std::optional<MatrixMetadata> matrix;
    Precision precision{Precision::f64};
    std::optional<Format> format;
    std::string executor{"reference"};
    int threads{1};
    size_type warmups{};
    size_type repetitions{};
    /// one wall-clock time per repetition, warm-ups excluded
    std::vector<double> times_s;
    double mean_time_s{};
    /// work of one repetition
    std::uint64_t flops{};
    /// traffic of one repetition (full footprint for SpMV)
    std::uint64_t bytes{};
    std::uint64_t bytes_simplified{};
    double gflops{};
    double achieved_gbs{};
    double achieved_gbs_simplified{};
    /// achieved_gbs / measured device bandwidth
    double fraction_of_peak_bw{};
    /// achieved_gbs / theoretical device bandwidth
    double fraction_of_theoretical_bw{};
    std::optional<std::uint64_t> iterations;
    std::optional<bool> converged;
    std::optional<std::string> breakdown;
    std::string notes;

    friend bool operator==(const BenchmarkRecord&,
                           const BenchmarkRecord&) = default;
};


/**
 * Fills mean_time_s and the derived rates from times_s, flops and bytes.
 * A zero mean time (timing disabled) yields zero rates. Without a device the
 * fractions are left at zero.
 */
void finalize_record(BenchmarkRecord& record, const DeviceSpec* device);


/// Runs `warmups` untimed and `repetitions` timed calls of `body`.
template <typename Body>
std::vector<double> time_repetitions(const Protocol& protocol, Body&& body)
{
    for (size_type i = 0; i < protocol.warmups; ++i) {
        body();
    }
    std::vector<double> times;
    times.reserve(protocol.repetitions);
    for (size_type i = 0; i < protocol.repetitions; ++i) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(protocol.timing
                            ? std::chrono::duration<double>(stop - start)
                                  .count()
                            : 0.0);
    }
    return times;
}


}  // namespace psl
