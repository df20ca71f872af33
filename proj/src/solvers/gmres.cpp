// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/solvers/flops.hpp>

#include <vector>

#include "solvers/common.hpp"


namespace psl {
namespace {


template <Scalar T>
struct Givens {
    T c{1};
    T s{0};

    /// Rotation mapping (a, b) to (r, 0).
    static Givens zeroing(T a, T b)
    {
        if (b == T{0}) {
            return {T{1}, T{0}};
        }
        if (std::abs(b) > std::abs(a)) {
            const auto t = a / b;
            const auto s = T{1} / std::sqrt(T{1} + t * t);
            return {s * t, s};
        }
        const auto t = b / a;
        const auto c = T{1} / std::sqrt(T{1} + t * t);
        return {c, c * t};
    }

    void apply(T& a, T& b) const
    {
        const auto ra = c * a + s * b;
        const auto rb = -s * a + c * b;
        a = ra;
        b = rb;
    }
};


/// Column-major (restart + 1) x restart upper Hessenberg matrix.
template <Scalar T>
class Hessenberg {
public:
    explicit Hessenberg(size_type restart)
        : rows_{restart + 1}, values_((restart + 1) * restart)
    {}

    T& operator()(size_type i, size_type j) { return values_[j * rows_ + i]; }

    void clear() { std::fill(values_.begin(), values_.end(), T{0}); }

private:
    size_type rows_;
    std::vector<T> values_;
};


}  // namespace


template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_gmres(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec)
{
    using T = typename Matrix::value_type;
    solver_detail::check_system("gmres", a, b, x0);
    const auto n = b.size();
    const auto nz = a.nnz();
    solver_detail::SolveState<T> state(config, norm2(b, exec));
    auto& result = state.result;
    const auto restart = config.restart;

    DenseVector<T> x = x0;
    DenseVector<T> r(n);
    DenseVector<T> w(n);
    std::vector<DenseVector<T>> basis;
    Hessenberg<T> h(restart);
    std::vector<Givens<T>> rotations(restart);
    std::vector<T> g(restart + 1);
    std::vector<T> y(restart);

    solver_detail::residual(a, b, x, r, exec);
    auto beta = norm2(r, exec);
    state.record(beta);

    bool done = state.reached_tolerance();
    while (!done && result.iterations < state.max_iters) {
        const bool first_cycle = result.outer_iterations == 0;
        ++result.outer_iterations;
        if (!first_cycle) {
            // residual of the updated iterate; setup of the first cycle is
            // not counted
            solver_detail::residual(a, b, x, r, exec);
            beta = norm2(r, exec);
        }
        h.clear();
        std::fill(g.begin(), g.end(), T{0});
        g[0] = beta;
        if (basis.empty()) {
            basis.emplace_back(n);
        }
        copy(r, basis[0], exec);
        scale(beta > T{0} ? T{1} / beta : T{0}, basis[0], exec);

        size_type steps = 0;
        bool happy = false;
        while (steps < restart && result.iterations < state.max_iters) {
            const auto j = steps;
            spmv(a, basis[j], w, exec);
            T column_norm2{};
            for (size_type i = 0; i <= j; ++i) {
                const auto hij = dot(w, basis[i], exec);
                h(i, j) = hij;
                column_norm2 += hij * hij;
                add_scaled(-hij, basis[i], w, exec);
            }
            const auto h_next = norm2(w, exec);
            column_norm2 += h_next * h_next;
            // |A v_j| = sqrt(sum_i h_ij^2 + h_next^2) in exact arithmetic
            happy = !(h_next > state.eps * std::sqrt(column_norm2));
            if (basis.size() <= j + 1) {
                basis.emplace_back(n);
            }
            copy(w, basis[j + 1], exec);
            scale(happy ? T{0} : T{1} / h_next, basis[j + 1], exec);

            for (size_type i = 0; i < j; ++i) {
                rotations[i].apply(h(i, j), h(i + 1, j));
            }
            h(j + 1, j) = h_next;
            rotations[j] = Givens<T>::zeroing(h(j, j), h(j + 1, j));
            rotations[j].apply(h(j, j), h(j + 1, j));
            h(j + 1, j) = T{0};
            rotations[j].apply(g[j], g[j + 1]);

            ++steps;
            ++result.iterations;
            result.flops += gmres_inner_flops(j, n, nz);
            state.record(std::abs(g[j + 1]));
            if (state.reached_tolerance() || (happy && !state.fixed)) {
                break;
            }
        }

        // y = R^-1 g, then x += V y
        for (size_type i = steps; i-- > 0;) {
            auto sum = g[i];
            for (size_type k = i + 1; k < steps; ++k) {
                sum -= h(i, k) * y[k];
            }
            y[i] = state.ratio(sum, h(i, i));
        }
        for (size_type i = 0; i < steps; ++i) {
            add_scaled(y[i], basis[i], x, exec);
        }
        result.flops += gmres_cycle_flops(steps, n, nz, first_cycle);

        if (state.fixed) {
            continue;
        }
        if (state.reached_tolerance()) {
            done = true;
        } else if (happy) {
            // the Krylov space is exhausted but the residual is not small
            state.breakdown(Breakdown::h_breakdown);
            done = true;
        }
    }
    return state.finish(a, b, std::move(x), exec);
}


PSL_INSTANTIATE_SOLVER(solve_gmres);


}  // namespace psl
