// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/solvers/flops.hpp>

#include "solvers/common.hpp"


namespace psl {


template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_bicgstab(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec)
{
    using T = typename Matrix::value_type;
    solver_detail::check_system("bicgstab", a, b, x0);
    const auto n = b.size();
    solver_detail::SolveState<T> state(config, norm2(b, exec));
    auto& result = state.result;
    result.outer_iterations = 1;

    DenseVector<T> x = x0;
    DenseVector<T> r(n);
    solver_detail::residual(a, b, x, r, exec);
    state.record(norm2(r, exec));
    if (state.reached_tolerance()) {
        return state.finish(a, b, std::move(x), exec);
    }
    const DenseVector<T> r_hat = r;
    DenseVector<T> p(n);
    DenseVector<T> v(n);
    DenseVector<T> t(n);
    T rho_prev{1};
    T alpha{1};
    T omega{1};

    for (size_type iter = 1; iter <= state.max_iters; ++iter) {
        const auto rho = dot(r_hat, r, exec);
        if (state.degenerate(rho) && state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        const auto beta = state.degenerate(omega)
                              ? T{0}
                              : state.ratio(rho, rho_prev) * (alpha / omega);
        // p = r + beta * (p - omega * v)
        add_scaled(-omega, v, p, exec);
        axpby(T{1}, r, beta, p, exec);
        spmv(a, p, v, exec);
        const auto sigma = dot(r_hat, v, exec);
        if (state.degenerate(sigma) &&
            state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        alpha = state.ratio(rho, sigma);
        // r becomes s = r - alpha * v
        add_scaled(-alpha, v, r, exec);
        const auto ss = dot(r, r, exec);
        state.relres = static_cast<double>(std::sqrt(ss) / state.b_scale);
        if (!state.fixed && state.relres <= state.tol) {
            add_scaled(alpha, p, x, exec);
            result.iterations = iter;
            result.flops += bicgstab_half_iteration_flops(n, a.nnz());
            state.record(std::sqrt(ss));
            break;
        }
        spmv(a, r, t, exec);
        const auto ts = dot(t, r, exec);
        const auto tt = dot(t, t, exec);
        omega = state.ratio(ts, tt);
        if (state.degenerate(omega) &&
            state.breakdown(Breakdown::omega_zero)) {
            add_scaled(alpha, p, x, exec);
            break;
        }
        add_scaled(alpha, p, x, exec);
        add_scaled(omega, r, x, exec);
        add_scaled(-omega, t, r, exec);
        const auto rr = dot(r, r, exec);
        rho_prev = rho;

        result.iterations = iter;
        result.flops += bicgstab_iteration_flops(n, a.nnz());
        state.record(std::sqrt(rr));
        if (state.reached_tolerance()) {
            break;
        }
    }
    return state.finish(a, b, std::move(x), exec);
}


PSL_INSTANTIATE_SOLVER(solve_bicgstab);


}  // namespace psl
