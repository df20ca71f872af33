// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/record.hpp>


namespace psl {


void finalize_record(BenchmarkRecord& record, const DeviceSpec* device)
{
    double total = 0.0;
    for (const auto t : record.times_s) {
        total += t;
    }
    record.mean_time_s =
        record.times_s.empty()
            ? 0.0
            : total / static_cast<double>(record.times_s.size());
    const auto rate = [&](std::uint64_t amount) {
        return record.mean_time_s > 0.0
                   ? static_cast<double>(amount) / record.mean_time_s / 1e9
                   : 0.0;
    };
    record.gflops = rate(record.flops);
    record.achieved_gbs = rate(record.bytes);
    record.achieved_gbs_simplified = rate(record.bytes_simplified);
    if (device) {
        record.fraction_of_peak_bw =
            record.achieved_gbs / device->measured_bandwidth_gbs;
        record.fraction_of_theoretical_bw =
            record.achieved_gbs / device->theoretical_bandwidth_gbs;
    } else {
        record.fraction_of_peak_bw = 0.0;
        record.fraction_of_theoretical_bw = 0.0;
    }
}


}  // namespace psl
