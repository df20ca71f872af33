// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/solvers/flops.hpp>

#include "solvers/common.hpp"


namespace psl {


template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_cg(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec)
{
    using T = typename Matrix::value_type;
    solver_detail::check_system("cg", a, b, x0);
    const auto n = b.size();
    solver_detail::SolveState<T> state(config, norm2(b, exec));
    auto& result = state.result;
    result.outer_iterations = 1;

    DenseVector<T> x = x0;
    DenseVector<T> r(n);
    DenseVector<T> q(n);
    solver_detail::residual(a, b, x, r, exec);
    auto rr = dot(r, r, exec);
    state.record(std::sqrt(rr));
    if (state.reached_tolerance()) {
        return state.finish(a, b, std::move(x), exec);
    }
    DenseVector<T> p = r;

    for (size_type iter = 1; iter <= state.max_iters; ++iter) {
        spmv(a, p, q, exec);
        const auto pq = dot(p, q, exec);
        if (state.degenerate(pq) &&
            state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        const auto alpha = state.ratio(rr, pq);
        add_scaled(alpha, p, x, exec);
        add_scaled(-alpha, q, r, exec);
        const auto rr_next = dot(r, r, exec);

        result.iterations = iter;
        result.flops += cg_iteration_flops(n, a.nnz());
        state.record(std::sqrt(rr_next));
        if (state.reached_tolerance()) {
            break;
        }
        if (state.degenerate(rr) && state.breakdown(Breakdown::rho_zero)) {
            break;
        }
        const auto beta = state.ratio(rr_next, rr);
        axpby(T{1}, r, beta, p, exec);
        rr = rr_next;
    }
    return state.finish(a, b, std::move(x), exec);
}


PSL_INSTANTIATE_SOLVER(solve_cg);


}  // namespace psl
