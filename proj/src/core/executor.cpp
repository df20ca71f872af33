// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/core/executor.hpp>

#include <omp.h>

#include <psl/core/error.hpp>
#include <psl/core/types.hpp>


namespace psl {


Executor Executor::parallel(int thread_count)
{
    if (thread_count < 0) {
        throw InvalidArgument("thread count must be positive, got " +
                              std::to_string(thread_count));
    }
    if (thread_count == 0) {
        thread_count = omp_get_max_threads();
    }
    return Executor{ExecutorKind::parallel, thread_count};
}


std::optional<Precision> parse_precision(std::string_view s) noexcept
{
    if (s == "f32" || s == "float" || s == "single") {
        return Precision::f32;
    }
    if (s == "f64" || s == "double") {
        return Precision::f64;
    }
    return std::nullopt;
}


}  // namespace psl
