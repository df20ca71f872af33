// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <psl/core/executor.hpp>
#include <psl/core/types.hpp>
#include <psl/perfmodel/device.hpp>
#include <psl/perfmodel/record.hpp>


namespace psl {


/// Memory-bound kernels in the style of BabelStream.
enum class StreamKernel { copy, mul, add, triad, dot };

std::string_view to_string(StreamKernel k) noexcept;
std::optional<StreamKernel> parse_stream_kernel(std::string_view s) noexcept;

/// 2 vb for copy, mul and dot; 3 vb for add and triad.
size_type stream_bytes_per_element(StreamKernel k, Precision p) noexcept;

/// 0 for copy, 1 for mul and add, 2 for triad and dot.
size_type stream_flops_per_element(StreamKernel k) noexcept;


/// Array initialization and scalar.
inline constexpr double stream_init_a = 1.0;
inline constexpr double stream_init_b = 2.0;
inline constexpr double stream_init_c = 0.0;
inline constexpr double stream_scalar = 0.4;


/**
 * Runs one stream kernel (copy: c = a, mul: b = s c, add: c = a + b,
 * triad: a = b + s c, dot: sum a b) on freshly initialized arrays.
 *
 * After the timed repetitions the outputs are compared against their closed
 * form; a relative deviation above 100 eps throws ValidationFailed.
 * achieved_gbs is bytes_per_element * array_len / mean time. Fractions are
 * computed when `device` is given.
 */
BenchmarkRecord run_stream(StreamKernel kernel, size_type array_len,
                           Precision precision, const Protocol& protocol,
                           const Executor& exec,
                           const DeviceSpec* device = nullptr);

/// Array length whose three arrays together exceed four times the
/// last-level cache, rounded up to a power of two in [2^15, 2^27].
size_type default_stream_length(Precision precision);

/// Powers of two from 2^15 to `max_len` (default 2^27).
std::vector<size_type> stream_sweep_lengths(size_type max_len = size_type{1}
                                                                << 27);

/// Last-level cache size in bytes, 0 if unknown.
size_type last_level_cache_bytes();


/// Rough peak FLOP rate from independent fused multiply-add chains.
double estimate_peak_gflops(Precision precision, const Executor& exec);

/**
 * Device description of this machine: the measured bandwidth is the best of
 * the copy, mul, add and triad kernels at `array_len`; the theoretical
 * bandwidth is unknown and set to the measured one; the peaks come from
 * estimate_peak_gflops.
 */
DeviceSpec measure_local_device(const Executor& exec, size_type array_len,
                                const Protocol& protocol = {});


}  // namespace psl
