// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <psl/perfmodel/device.hpp>
#include <psl/perfmodel/record.hpp>
#include <psl/perfmodel/roofline.hpp>


namespace psl {


enum class ReportFormat { json, csv };

std::string_view to_string(ReportFormat f) noexcept;
std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;


inline constexpr int report_schema_version = 1;


/**
 * Serializes `records` with a fixed field order.
 *
 * JSON: an object with schema_version, device, precision and the records.
 * Each record additionally carries arithmetic_intensity, bound_gflops
 * (spmv_bound at the device's measured bandwidth for the record's format and
 * precision) and attainable_gflops; all three are null for records without
 * a format.
 *
 * CSV: one header line followed by one line per record, times_s joined with
 * ';'. Empty fields stand for absent values.
 */
std::string emit_report(const std::vector<BenchmarkRecord>& records,
                        const RooflineModel& model, ReportFormat format);


struct Report {
    int schema_version{report_schema_version};
    DeviceSpec device;
    Precision precision{Precision::f64};
    std::vector<BenchmarkRecord> records;
};

/// Inverse of the JSON emit_report. Derived bound columns are not read back.
Report parse_report(std::string_view json);


}  // namespace psl
