// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>

#include <psl/core/error.hpp>
#include <psl/core/executor.hpp>


namespace psl {


template <typename Signature>
class Operation;


/**
 * A named operation aggregating one kernel binding per executor kind.
 *
 * Running the operation on an executor picks that executor's binding. A
 * missing parallel binding falls back to the reference binding; an operation
 * without any binding throws UnknownOperation.
 */
template <typename R, typename... Args>
class Operation<R(Args...)> {
public:
    using kernel_type = std::function<R(const Executor&, Args...)>;

    explicit Operation(std::string name) : name_{std::move(name)} {}

    Operation& bind(ExecutorKind kind, kernel_type kernel)
    {
        bindings_[slot(kind)] = std::move(kernel);
        return *this;
    }

    bool has_binding(ExecutorKind kind) const noexcept
    {
        return static_cast<bool>(bindings_[slot(kind)]);
    }

    /// Kind of the binding that will run for `kind`.
    ExecutorKind resolve(ExecutorKind kind) const
    {
        if (has_binding(kind)) {
            return kind;
        }
        if (has_binding(ExecutorKind::reference)) {
            return ExecutorKind::reference;
        }
        throw UnknownOperation(name_);
    }

    const std::string& name() const noexcept { return name_; }

    R run(const Executor& exec, Args... args) const
    {
        return bindings_[slot(resolve(exec.kind()))](
            exec, std::forward<Args>(args)...);
    }

private:
    static constexpr std::size_t slot(ExecutorKind kind) noexcept
    {
        return static_cast<std::size_t>(kind);
    }

    std::string name_;
    std::array<kernel_type, num_executor_kinds> bindings_{};
};


template <typename R, typename... Args, typename... CallArgs>
R dispatch(const Operation<R(Args...)>& op, const Executor& exec,
           CallArgs&&... args)
{
    return op.run(exec, std::forward<CallArgs>(args)...);
}


}  // namespace psl
