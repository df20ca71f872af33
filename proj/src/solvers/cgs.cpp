// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/solvers/flops.hpp>

#include "solvers/common.hpp"


namespace psl {


template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_cgs(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec)
{
    using T = typename Matrix::value_type;
    solver_detail::check_system("cgs", a, b, x0);
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
    DenseVector<T> q(n);
    DenseVector<T> u(n);
    DenseVector<T> v(n);
    DenseVector<T> w(n);
    T rho_prev{};

    for (size_type iter = 1; iter <= state.max_iters; ++iter) {
        const auto rho = dot(r_hat, r, exec);
        if (state.degenerate(rho) && state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        // p and q start at zero, so beta is irrelevant in the first step
        const auto beta = iter == 1 ? T{0} : state.ratio(rho, rho_prev);
        // u = r + beta q;  p = u + beta (q + beta p)
        copy(r, u, exec);
        add_scaled(beta, q, u, exec);
        axpby(T{1}, q, beta, p, exec);
        axpby(T{1}, u, beta, p, exec);
        spmv(a, p, v, exec);
        const auto sigma = dot(r_hat, v, exec);
        if (state.degenerate(sigma) &&
            state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        const auto alpha = state.ratio(rho, sigma);
        // q = u - alpha v;  w = u + q
        copy(u, q, exec);
        add_scaled(-alpha, v, q, exec);
        copy(u, w, exec);
        add_scaled(T{1}, q, w, exec);
        add_scaled(alpha, w, x, exec);
        // v is free again: v = A w
        spmv(a, w, v, exec);
        add_scaled(-alpha, v, r, exec);
        const auto rr = dot(r, r, exec);
        rho_prev = rho;

        result.iterations = iter;
        result.flops += cgs_iteration_flops(n, a.nnz());
        state.record(std::sqrt(rr));
        if (state.reached_tolerance()) {
            break;
        }
    }
    return state.finish(a, b, std::move(x), exec);
}


PSL_INSTANTIATE_SOLVER(solve_cgs);


}  // namespace psl
