// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "solvers/common.hpp"


namespace psl {


std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::cg:
        return "cg";
    case Method::bicgstab:
        return "bicgstab";
    case Method::cgs:
        return "cgs";
    case Method::gmres:
        return "gmres";
    }
    return "unknown";
}


std::optional<Method> parse_method(std::string_view s) noexcept
{
    for (const auto m :
         {Method::cg, Method::bicgstab, Method::cgs, Method::gmres}) {
        if (s == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}


std::string_view to_string(Breakdown b) noexcept
{
    switch (b) {
    case Breakdown::rho_zero:
        return "RhoZero";
    case Breakdown::omega_zero:
        return "OmegaZero";
    case Breakdown::h_breakdown:
        return "HBreakdown";
    }
    return "unknown";
}


void SolverConfig::validate() const
{
    if (max_iters < 1) {
        throw InvalidArgument("max_iters must be at least 1");
    }
    if (restart < 1) {
        throw InvalidArgument("restart must be at least 1");
    }
    if (rel_tol && !(*rel_tol > 0.0)) {
        throw InvalidArgument("rel_tol must be positive");
    }
}


template <typename Matrix>
SolverResult<typename Matrix::value_type> solve(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec)
{
    switch (config.method) {
    case Method::cg:
        return solve_cg(a, b, x0, config, exec);
    case Method::bicgstab:
        return solve_bicgstab(a, b, x0, config, exec);
    case Method::cgs:
        return solve_cgs(a, b, x0, config, exec);
    case Method::gmres:
        return solve_gmres(a, b, x0, config, exec);
    }
    throw InvalidArgument("unknown solver method");
}


PSL_INSTANTIATE_SOLVER(solve);


}  // namespace psl
