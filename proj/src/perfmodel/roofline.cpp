// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/perfmodel/roofline.hpp>

#include <algorithm>

#include <psl/core/error.hpp>
#include <psl/spmv/spmv.hpp>


namespace psl {


Ratio arithmetic_intensity(Format format, Precision precision)
{
    return Ratio::reduced(
        spmv_flops(1),
        footprint_bytes(format, 1, precision, FootprintMode::simplified));
}


double spmv_bound(double bandwidth_gbs, double ai)
{
    if (bandwidth_gbs < 0) {
        throw InvalidArgument("bandwidth must be non-negative");
    }
    return bandwidth_gbs * ai;
}


double RooflineModel::attainable(double ai) const
{
    if (ai < 0) {
        throw InvalidArgument("arithmetic intensity must be non-negative");
    }
    return std::min(device.peak(precision),
                    device.measured_bandwidth_gbs * ai);
}


double RooflineModel::ridge_point() const
{
    return device.peak(precision) / device.measured_bandwidth_gbs;
}


}  // namespace psl
