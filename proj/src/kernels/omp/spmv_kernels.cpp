// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include "kernels/spmv_kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>


namespace psl::kernels::omp {


template <Scalar T>
void spmv_csr(const Executor& exec, const CsrMatrix<T>& m,
              std::span<const T> x, std::span<T> y, T alpha, T beta)
{
    const auto row_ptrs = m.row_ptrs();
    const auto col_idxs = m.col_idxs();
    const auto values = m.values();
    const auto num_rows = static_cast<std::int64_t>(m.num_rows());
#pragma omp parallel for num_threads(exec.thread_count()) schedule(static)
    for (std::int64_t row = 0; row < num_rows; ++row) {
        T sum{};
        for (auto k = row_ptrs[row]; k < row_ptrs[row + 1]; ++k) {
            sum += values[k] * x[col_idxs[k]];
        }
        y[row] = beta == T{0} ? alpha * sum : alpha * sum + beta * y[row];
    }
}


namespace {


template <Scalar T>
struct RowPartial {
    index_type row{-1};
    T sum{};
};


}  // namespace


template <Scalar T>
void spmv_coo(const Executor& exec, const CooMatrix<T>& m,
              std::span<const T> x, std::span<T> y, T alpha, T beta)
{
    const auto row_idxs = m.row_idxs();
    const auto col_idxs = m.col_idxs();
    const auto values = m.values();
    const auto nnz = static_cast<std::int64_t>(m.nnz());
    const auto num_rows = static_cast<std::int64_t>(m.num_rows());
    const std::int64_t num_segments = exec.thread_count();
    const auto segment_len = (nnz + num_segments - 1) / num_segments;

    // Per segment: the row continued from the previous segment (head) and
    // the row continuing into the next one (tail). These are summed locally
    // and reconciled afterwards; every other row lies entirely inside one
    // segment and is written directly.
    std::vector<RowPartial<T>> heads(static_cast<size_type>(num_segments));
    std::vector<RowPartial<T>> tails(static_cast<size_type>(num_segments));

#pragma omp parallel num_threads(exec.thread_count())
    {
#pragma omp for schedule(static)
        for (std::int64_t row = 0; row < num_rows; ++row) {
            y[row] = beta == T{0} ? T{0} : beta * y[row];
        }

#pragma omp for schedule(static, 1)
        for (std::int64_t s = 0; s < num_segments; ++s) {
            const auto begin = std::min(nnz, s * segment_len);
            const auto end = std::min(nnz, begin + segment_len);
            auto k = begin;
            while (k < end) {
                const auto row = row_idxs[k];
                const bool starts_before = k == begin && begin > 0 &&
                                           row_idxs[begin - 1] == row;
                T sum{};
                for (; k < end && row_idxs[k] == row; ++k) {
                    sum += values[k] * x[col_idxs[k]];
                }
                const bool continues_after = k == end && end < nnz &&
                                             row_idxs[end] == row;
                if (starts_before) {
                    heads[s] = {row, sum};
                } else if (continues_after) {
                    tails[s] = {row, sum};
                } else {
                    y[row] += alpha * sum;
                }
            }
        }
    }

    // Partials of one row are adjacent in (head_0, tail_0, head_1, ...)
    // order because rows increase along the nonzero array.
    RowPartial<T> pending;
    const auto flush = [&] {
        if (pending.row >= 0) {
            y[pending.row] += alpha * pending.sum;
        }
    };
    const auto combine = [&](const RowPartial<T>& p) {
        if (p.row < 0) {
            return;
        }
        if (p.row == pending.row) {
            pending.sum += p.sum;
        } else {
            flush();
            pending = p;
        }
    };
    for (std::int64_t s = 0; s < num_segments; ++s) {
        combine(heads[s]);
        combine(tails[s]);
    }
    flush();
}


template void spmv_csr<float>(const Executor&, const CsrMatrix<float>&,
                              std::span<const float>, std::span<float>, float,
                              float);
template void spmv_csr<double>(const Executor&, const CsrMatrix<double>&,
                               std::span<const double>, std::span<double>,
                               double, double);
template void spmv_coo<float>(const Executor&, const CooMatrix<float>&,
                              std::span<const float>, std::span<float>, float,
                              float);
template void spmv_coo<double>(const Executor&, const CooMatrix<double>&,
                               std::span<const double>, std::span<double>,
                               double, double);


}  // namespace psl::kernels::omp
