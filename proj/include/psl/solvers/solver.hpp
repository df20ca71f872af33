// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <psl/core/dense_vector.hpp>
#include <psl/core/executor.hpp>
#include <psl/core/types.hpp>


namespace psl {


enum class Method { cg, bicgstab, cgs, gmres };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view s) noexcept;


enum class StopMode {
    /// stop once the recurrence residual reaches the tolerance
    residual,
    /// always run exactly max_iters iterations (benchmarking)
    fixed_iterations,
};


enum class Breakdown {
    /// a Lanczos-type inner product (rho, or the step denominator) vanished
    rho_zero,
    /// the BiCGSTAB stabilization step vanished
    omega_zero,
    /// the Arnoldi subdiagonal vanished without reaching the tolerance
    h_breakdown,
};

std::string_view to_string(Breakdown b) noexcept;


struct SolverConfig {
    Method method{Method::cg};
    size_type max_iters{1000};
    /// defaults to 1e-8 for f64 and 1e-5 for f32
    std::optional<double> rel_tol;
    /// GMRES only
    size_type restart{100};
    StopMode stop_mode{StopMode::residual};

    double tolerance(Precision p) const noexcept
    {
        return rel_tol.value_or(p == Precision::f64 ? 1e-8 : 1e-5);
    }

    /// Throws InvalidArgument on max_iters == 0, restart == 0 or a
    /// non-positive tolerance.
    void validate() const;
};


template <Scalar T>
struct SolverResult {
    DenseVector<T> x;
    size_type iterations{};
    /// ||b - A x|| / ||b|| recomputed with a fresh SpMV at exit
    /// (||b - A x|| when b == 0)
    double final_relres{};
    bool converged{};
    std::optional<Breakdown> breakdown;
    std::uint64_t flops{};
    /// restart cycles for GMRES, 1 for the short-recurrence methods
    size_type outer_iterations{};
    /// recurrence residual norm relative to ||b||: the initial value
    /// followed by one entry per iteration
    std::vector<double> residual_history;
};


/// Conjugate gradients for symmetric positive definite A (not verified).
template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_cg(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec);

/// BiCGSTAB with shadow residual r0.
template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_bicgstab(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec);

/// Conjugate gradients squared with shadow residual r0.
template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_cgs(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec);

/**
 * Restarted GMRES.
 *
 * Arnoldi with modified Gram-Schmidt (single pass); the Hessenberg least
 * squares problem is reduced incrementally with Givens rotations, so the
 * residual norm of every inner step is read off the rotated right-hand side
 * without forming x. Every inner step counts as one iteration.
 */
template <typename Matrix>
SolverResult<typename Matrix::value_type> solve_gmres(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec);

/// Runs the method selected in `config`.
template <typename Matrix>
SolverResult<typename Matrix::value_type> solve(
    const Matrix& a, const DenseVector<typename Matrix::value_type>& b,
    const DenseVector<typename Matrix::value_type>& x0,
    const SolverConfig& config, const Executor& exec);


}  // namespace psl
