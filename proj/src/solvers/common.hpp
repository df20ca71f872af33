// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>

#include <psl/core/blas1.hpp>
#include <psl/core/error.hpp>
#include <psl/formats/coo.hpp>
#include <psl/formats/csr.hpp>
#include <psl/solvers/solver.hpp>
#include <psl/spmv/spmv.hpp>


namespace psl::solver_detail {


template <typename Matrix, Scalar T>
void check_system(std::string_view where, const Matrix& a,
                  const DenseVector<T>& b, const DenseVector<T>& x0)
{
    if (a.num_rows() != a.num_cols()) {
        throw DimensionMismatch(std::string(where) + " needs a square matrix",
                                a.num_rows(), a.num_cols());
    }
    if (b.size() != a.num_rows()) {
        throw DimensionMismatch(std::string(where) + " right-hand side",
                                a.num_rows(), b.size());
    }
    if (x0.size() != a.num_cols()) {
        throw DimensionMismatch(std::string(where) + " initial guess",
                                a.num_cols(), x0.size());
    }
}


/// r = b - A x
template <typename Matrix, Scalar T>
void residual(const Matrix& a, const DenseVector<T>& b,
              const DenseVector<T>& x, DenseVector<T>& r, const Executor& exec)
{
    copy(b, r, exec);
    spmv(a, x, r, exec, T{-1}, T{1});
}


/**
 * Shared state of one solve: norms, tolerance, breakdown threshold and the
 * bookkeeping that ends up in SolverResult.
 */
template <Scalar T>
struct SolveState {
    SolveState(const SolverConfig& config, T b_norm)
        : tol{config.tolerance(precision_of<T>)},
          fixed{config.stop_mode == StopMode::fixed_iterations},
          max_iters{config.max_iters},
          b_scale{b_norm > T{0} ? b_norm : T{1}},
          threshold{eps * eps * b_scale * b_scale}
    {
        config.validate();
    }

    static constexpr T eps = std::numeric_limits<T>::epsilon();

    double tol;
    bool fixed;
    size_type max_iters;
    T b_scale;
    T threshold;
    double relres{};

    SolverResult<T> result;

    double record(T residual_norm)
    {
        relres = static_cast<double>(residual_norm / b_scale);
        result.residual_history.push_back(relres);
        return relres;
    }

    bool reached_tolerance() const { return !fixed && relres <= tol; }

    /// True when |value| is below the breakdown threshold (or not finite).
    bool degenerate(T value) const
    {
        return !std::isfinite(value) || std::abs(value) < threshold;
    }

    /**
     * Handles a degenerate scalar. Returns true if the solve must stop
     * (residual mode); in fixed-iteration mode the caller continues with a
     * zero step and the breakdown is recorded unless the iteration had
     * already converged.
     */
    bool breakdown(Breakdown kind)
    {
        if (relres > tol && !result.breakdown) {
            result.breakdown = kind;
        }
        return !fixed;
    }

    /// num / den, or 0 when den is degenerate
    T ratio(T num, T den) const { return degenerate(den) ? T{0} : num / den; }

    template <typename Matrix>
    SolverResult<T> finish(const Matrix& a, const DenseVector<T>& b,
                           DenseVector<T> x, const Executor& exec)
    {
        DenseVector<T> r(b.size());
        residual(a, b, x, r, exec);
        result.final_relres =
            static_cast<double>(norm2(r, exec) / b_scale);
        result.converged = result.final_relres <= tol;
        if (result.converged && !fixed) {
            result.breakdown.reset();
        }
        result.x = std::move(x);
        return std::move(result);
    }
};


}  // namespace psl::solver_detail


#define PSL_INSTANTIATE_SOLVER(name)                                        \
    template SolverResult<float> name(                                      \
        const CsrMatrix<float>&, const DenseVector<float>&,                 \
        const DenseVector<float>&, const SolverConfig&, const Executor&);   \
    template SolverResult<double> name(                                     \
        const CsrMatrix<double>&, const DenseVector<double>&,               \
        const DenseVector<double>&, const SolverConfig&, const Executor&);  \
    template SolverResult<float> name(                                      \
        const CooMatrix<float>&, const DenseVector<float>&,                 \
        const DenseVector<float>&, const SolverConfig&, const Executor&);   \
    template SolverResult<double> name(                                     \
        const CooMatrix<double>&, const DenseVector<double>&,               \
        const DenseVector<double>&, const SolverConfig&, const Executor&)
