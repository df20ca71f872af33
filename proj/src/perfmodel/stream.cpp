// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/stream.hpp>

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <span>

#include <psl/core/blas1.hpp>
#include <psl/core/error.hpp>
#include <psl/core/operation.hpp>

#include "kernels/stream_kernels.hpp"


namespace psl {
namespace {


template <Scalar T>
using fill_op = Operation<void(T, std::span<T>)>;
template <Scalar T>
using mul_op = Operation<void(T, std::span<const T>, std::span<T>)>;
template <Scalar T>
using add_op =
    Operation<void(std::span<const T>, std::span<const T>, std::span<T>)>;
template <Scalar T>
using triad_op =
    Operation<void(T, std::span<const T>, std::span<const T>, std::span<T>)>;
template <Scalar T>
using fma_op = Operation<std::uint64_t(std::uint64_t, T&)>;


template <Scalar T>
const fill_op<T>& fill_operation()
{
    static const auto op =
        fill_op<T>("stream_fill")
            .bind(ExecutorKind::reference, kernels::reference::fill<T>)
            .bind(ExecutorKind::parallel, kernels::omp::fill<T>);
    return op;
}

template <Scalar T>
const mul_op<T>& mul_operation()
{
    static const auto op =
        mul_op<T>("stream_mul")
            .bind(ExecutorKind::reference, kernels::reference::mul<T>)
            .bind(ExecutorKind::parallel, kernels::omp::mul<T>);
    return op;
}

template <Scalar T>
const add_op<T>& add_operation()
{
    static const auto op =
        add_op<T>("stream_add")
            .bind(ExecutorKind::reference, kernels::reference::add<T>)
            .bind(ExecutorKind::parallel, kernels::omp::add<T>);
    return op;
}

template <Scalar T>
const triad_op<T>& triad_operation()
{
    static const auto op =
        triad_op<T>("stream_triad")
            .bind(ExecutorKind::reference, kernels::reference::triad<T>)
            .bind(ExecutorKind::parallel, kernels::omp::triad<T>);
    return op;
}

template <Scalar T>
const fma_op<T>& fma_operation()
{
    static const auto op =
        fma_op<T>("fma_chains")
            .bind(ExecutorKind::reference, kernels::reference::fma_chains<T>)
            .bind(ExecutorKind::parallel, kernels::omp::fma_chains<T>);
    return op;
}


template <Scalar T>
void validate_array(std::string_view kernel, std::span<const T> values,
                    T expected)
{
    const auto tol = 100 * std::numeric_limits<T>::epsilon() *
                     std::abs(expected);
    for (size_type i = 0; i < values.size(); ++i) {
        if (!(std::abs(values[i] - expected) <= tol)) {
            throw ValidationFailed(
                std::string(kernel) + ": element " + std::to_string(i) +
                " is " + std::to_string(values[i]) + ", expected " +
                std::to_string(expected));
        }
    }
}


template <Scalar T>
BenchmarkRecord run_stream_impl(StreamKernel kernel, size_type len,
                                const Protocol& protocol,
                                const Executor& exec, const DeviceSpec* device)
{
    if (len < 1) {
        throw InvalidArgument("stream array length must be at least 1");
    }
    DenseVector<T> a(len);
    DenseVector<T> b(len);
    DenseVector<T> c(len);
    const auto s = static_cast<T>(stream_scalar);
    dispatch(fill_operation<T>(), exec, static_cast<T>(stream_init_a),
             a.values());
    dispatch(fill_operation<T>(), exec, static_cast<T>(stream_init_b),
             b.values());
    dispatch(fill_operation<T>(), exec, static_cast<T>(stream_init_c),
             c.values());

    T sum{};
    const auto body = [&] {
        switch (kernel) {
        case StreamKernel::copy:
            dispatch(ops::copy<T>(), exec, std::as_const(a).values(),
                     c.values());
            break;
        case StreamKernel::mul:
            dispatch(mul_operation<T>(), exec, s, std::as_const(c).values(),
                     b.values());
            break;
        case StreamKernel::add:
            dispatch(add_operation<T>(), exec, std::as_const(a).values(),
                     std::as_const(b).values(), c.values());
            break;
        case StreamKernel::triad:
            dispatch(triad_operation<T>(), exec, s, std::as_const(b).values(),
                     std::as_const(c).values(), a.values());
            break;
        case StreamKernel::dot:
            sum = dispatch(ops::dot<T>(), exec, std::as_const(a).values(),
                           std::as_const(b).values());
            break;
        }
    };

    BenchmarkRecord record;
    record.times_s = time_repetitions(protocol, body);

    const auto init_a = static_cast<T>(stream_init_a);
    const auto init_b = static_cast<T>(stream_init_b);
    const auto init_c = static_cast<T>(stream_init_c);
    const auto name = to_string(kernel);
    switch (kernel) {
    case StreamKernel::copy:
        validate_array<T>(name, c.values(), init_a);
        break;
    case StreamKernel::mul:
        validate_array<T>(name, b.values(), s * init_c);
        break;
    case StreamKernel::add:
        validate_array<T>(name, c.values(), init_a + init_b);
        break;
    case StreamKernel::triad:
        validate_array<T>(name, a.values(), init_b + s * init_c);
        break;
    case StreamKernel::dot:
        validate_array<T>(name, std::span<const T>(&sum, 1),
                          init_a * init_b * static_cast<T>(len));
        break;
    }

    record.kernel = "stream_" + std::string(name);
    record.precision = precision_of<T>;
    record.executor = std::string(exec.name());
    record.threads = exec.thread_count();
    record.warmups = protocol.warmups;
    record.repetitions = protocol.repetitions;
    record.bytes = stream_bytes_per_element(kernel, precision_of<T>) * len;
    record.bytes_simplified = record.bytes;
    record.flops = stream_flops_per_element(kernel) * len;
    record.notes = "array_len=" + std::to_string(len);
    finalize_record(record, device);
    return record;
}


template <Scalar T>
double estimate_peak_impl(const Executor& exec)
{
    T checksum{};
    dispatch(fma_operation<T>(), exec, std::uint64_t{1} << 14, checksum);
    std::uint64_t steps = std::uint64_t{1} << 16;
    // grow the problem until one run takes at least 50 ms
    while (true) {
        const auto start = std::chrono::steady_clock::now();
        const auto flops =
            dispatch(fma_operation<T>(), exec, steps, checksum);
        const auto seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (seconds >= 0.05 || steps >= (std::uint64_t{1} << 34)) {
            if (!std::isfinite(checksum)) {
                throw ValidationFailed("peak estimate produced a non-finite "
                                       "checksum");
            }
            return static_cast<double>(flops) / seconds / 1e9;
        }
        steps *= 4;
    }
}


}  // namespace


std::string_view to_string(StreamKernel k) noexcept
{
    switch (k) {
    case StreamKernel::copy:
        return "copy";
    case StreamKernel::mul:
        return "mul";
    case StreamKernel::add:
        return "add";
    case StreamKernel::triad:
        return "triad";
    case StreamKernel::dot:
        return "dot";
    }
    return "unknown";
}


std::optional<StreamKernel> parse_stream_kernel(std::string_view s) noexcept
{
    for (const auto k : {StreamKernel::copy, StreamKernel::mul,
                         StreamKernel::add, StreamKernel::triad,
                         StreamKernel::dot}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    return std::nullopt;
}


size_type stream_bytes_per_element(StreamKernel k, Precision p) noexcept
{
    const auto arrays =
        k == StreamKernel::add || k == StreamKernel::triad ? 3 : 2;
    return arrays * value_bytes(p);
}


size_type stream_flops_per_element(StreamKernel k) noexcept
{
    switch (k) {
    case StreamKernel::copy:
        return 0;
    case StreamKernel::mul:
    case StreamKernel::add:
        return 1;
    case StreamKernel::triad:
    case StreamKernel::dot:
        return 2;
    }
    return 0;
}


BenchmarkRecord run_stream(StreamKernel kernel, size_type array_len,
                           Precision precision, const Protocol& protocol,
                           const Executor& exec, const DeviceSpec* device)
{
    return precision == Precision::f32
               ? run_stream_impl<float>(kernel, array_len, protocol, exec,
                                        device)
               : run_stream_impl<double>(kernel, array_len, protocol, exec,
                                         device);
}


size_type last_level_cache_bytes()
{
    for (const auto name : {_SC_LEVEL3_CACHE_SIZE, _SC_LEVEL2_CACHE_SIZE}) {
        const auto bytes = sysconf(name);
        if (bytes > 0) {
            return static_cast<size_type>(bytes);
        }
    }
    for (const auto index : {3, 2}) {
        std::ifstream in("/sys/devices/system/cpu/cpu0/cache/index" +
                         std::to_string(index) + "/size");
        size_type kib{};
        if (in >> kib) {
            return kib * 1024;
        }
    }
    return 0;
}


size_type default_stream_length(Precision precision)
{
    constexpr size_type min_len = size_type{1} << 15;
    constexpr size_type max_len = size_type{1} << 27;
    const auto llc = last_level_cache_bytes();
    if (llc == 0) {
        return size_type{1} << 25;
    }
    const auto wanted = 4 * llc / (3 * value_bytes(precision)) + 1;
    return std::clamp(std::bit_ceil(wanted), min_len, max_len);
}


std::vector<size_type> stream_sweep_lengths(size_type max_len)
{
    std::vector<size_type> lengths;
    for (size_type len = size_type{1} << 15; len <= max_len; len *= 2) {
        lengths.push_back(len);
    }
    return lengths;
}


double estimate_peak_gflops(Precision precision, const Executor& exec)
{
    return precision == Precision::f32 ? estimate_peak_impl<float>(exec)
                                       : estimate_peak_impl<double>(exec);
}


DeviceSpec measure_local_device(const Executor& exec, size_type array_len,
                                const Protocol& protocol)
{
    if (!protocol.timing) {
        throw InvalidArgument("measuring the local device requires timing");
    }
    double best = 0.0;
    for (const auto k : {StreamKernel::copy, StreamKernel::mul,
                         StreamKernel::add, StreamKernel::triad}) {
        const auto record =
            run_stream(k, array_len, Precision::f64, protocol, exec);
        best = std::max(best, record.achieved_gbs);
    }
    DeviceSpec spec;
    spec.name = "local (" + std::string(exec.name()) + ", " +
                std::to_string(exec.thread_count()) + " threads)";
    spec.measured_bandwidth_gbs = best;
    spec.theoretical_bandwidth_gbs = best;
    spec.peak_gflops[Precision::f32] =
        estimate_peak_gflops(Precision::f32, exec);
    spec.peak_gflops[Precision::f64] =
        estimate_peak_gflops(Precision::f64, exec);
    spec.validate();
    return spec;
}


}  // namespace psl
