// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>


namespace psl {


enum class ExecutorKind { reference, parallel };

inline constexpr int num_executor_kinds = 2;

constexpr std::string_view to_string(ExecutorKind kind) noexcept
{
    return kind == ExecutorKind::reference ? "reference" : "parallel";
}


/**
 * Handle selecting where and how kernels run.
 *
 * The reference executor runs every kernel sequentially in a fixed order and
 * serves as the oracle for the parallel (OpenMP) executor. Executors are
 * small immutable values; copy them freely between threads.
 */
class Executor {
public:
    static Executor reference() noexcept
    {
        return Executor{ExecutorKind::reference, 1};
    }

    /// `thread_count` of 0 picks the OpenMP default; negative throws.
    static Executor parallel(int thread_count = 0);

    ExecutorKind kind() const noexcept { return kind_; }

    int thread_count() const noexcept { return thread_count_; }

    std::string_view name() const noexcept { return to_string(kind_); }

    friend bool operator==(const Executor&, const Executor&) = default;

private:
    Executor(ExecutorKind kind, int thread_count) noexcept
        : kind_{kind}, thread_count_{thread_count}
    {}

    ExecutorKind kind_;
    int thread_count_;
};


}  // namespace psl
