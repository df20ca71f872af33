// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include <psl/core/blas1.hpp>
#include <psl/core/error.hpp>
#include <psl/core/executor.hpp>
#include <psl/core/operation.hpp>


using namespace psl;


TEST_CASE("executor kinds and thread counts")
{
    const auto ref = Executor::reference();
    CHECK(ref.kind() == ExecutorKind::reference);
    CHECK(ref.thread_count() == 1);
    CHECK(ref.name() == "reference");

    const auto par = Executor::parallel(3);
    CHECK(par.kind() == ExecutorKind::parallel);
    CHECK(par.thread_count() == 3);
    CHECK(Executor::parallel().thread_count() >= 1);
    CHECK_THROWS_AS(Executor::parallel(-1), InvalidArgument);
}


TEST_CASE("precision sizes")
{
    CHECK(value_bytes(Precision::f32) == 4);
    CHECK(value_bytes(Precision::f64) == 8);
    CHECK(index_bytes == 4);
    CHECK(parse_precision("f32") == Precision::f32);
    CHECK(parse_precision("f64") == Precision::f64);
    CHECK_FALSE(parse_precision("f16"));
}


TEST_CASE("operation dispatch")
{
    using op_type = Operation<int(int)>;

    SUBCASE("each kind runs its own binding")
    {
        const auto op =
            op_type("twice")
                .bind(ExecutorKind::reference,
                      [](const Executor&, int v) { return 2 * v; })
                .bind(ExecutorKind::parallel,
                      [](const Executor& e, int v) {
                          return 2 * v + 1000 * e.thread_count();
                      });
        CHECK(dispatch(op, Executor::reference(), 4) == 8);
        CHECK(dispatch(op, Executor::parallel(2), 4) == 2008);
    }

    SUBCASE("missing parallel binding falls back to reference")
    {
        const auto op = op_type("ref_only").bind(
            ExecutorKind::reference, [](const Executor&, int v) { return v; });
        CHECK(op.resolve(ExecutorKind::parallel) == ExecutorKind::reference);
        CHECK(dispatch(op, Executor::parallel(4), 7) == 7);
    }

    SUBCASE("no binding at all")
    {
        const op_type op("nothing");
        CHECK_THROWS_AS(dispatch(op, Executor::reference(), 1),
                        UnknownOperation);
        CHECK_THROWS_AS(dispatch(op, Executor::parallel(2), 1),
                        UnknownOperation);
    }
}


TEST_CASE_TEMPLATE("dot, axpy and norm2 examples", T, float, double)
{
    for (const auto& exec : {Executor::reference(), Executor::parallel(4)}) {
        CHECK(dot(DenseVector<T>{1, 0}, DenseVector<T>{0, 1}, exec) == T{0});
        CHECK(dot(DenseVector<T>{1, 2, 3}, DenseVector<T>{1, 2, 3}, exec) ==
              T{14});
        CHECK(dot(DenseVector<T>{}, DenseVector<T>{}, exec) == T{0});

        const DenseVector<T> x{T(0.5), T(-2), T(3)};
        const DenseVector<T> y{T(4), T(1), T(-1)};
        CHECK(axpy(T{0}, x, y, exec) == y);
        CHECK(axpy(T{1}, DenseVector<T>{1, 1}, DenseVector<T>{0, 2}, exec) ==
              DenseVector<T>{1, 3});
        CHECK(axpy(T{-1}, x, x, exec) == DenseVector<T>(3));

        CHECK(norm2(DenseVector<T>{3, 4}, exec) == T{5});
        CHECK(norm2(DenseVector<T>(5), exec) == T{0});
        CHECK(norm2(DenseVector<T>{T(-2.5)}, exec) == T(2.5));
    }
}


TEST_CASE("size mismatches are rejected")
{
    const auto exec = Executor::reference();
    const DenseVector<double> a(3);
    const DenseVector<double> b(4);
    DenseVector<double> c(4);
    CHECK_THROWS_AS(dot(a, b, exec), DimensionMismatch);
    CHECK_THROWS_AS(axpy(1.0, a, b, exec), DimensionMismatch);
    CHECK_THROWS_AS(add_scaled(1.0, a, c, exec), DimensionMismatch);
    CHECK_THROWS_AS(axpby(1.0, a, 1.0, c, exec), DimensionMismatch);
    CHECK_THROWS_AS(copy(a, c, exec), DimensionMismatch);
}


namespace {


template <typename T>
DenseVector<T> random_vector(std::mt19937_64& rng, size_type n)
{
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    DenseVector<T> v(n);
    for (auto& e : v) {
        e = static_cast<T>(dist(rng));
    }
    return v;
}


template <typename T>
T max_abs(const DenseVector<T>& v)
{
    T m{};
    for (const auto e : v) {
        m = std::max(m, std::abs(e));
    }
    return m;
}


}  // namespace


TEST_CASE_TEMPLATE("parallel backend matches reference", T, float, double)
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<size_type> length(0, 5000);
    const auto eps = std::numeric_limits<T>::epsilon();
    const auto ref = Executor::reference();
    for (int trial = 0; trial < 120; ++trial) {
        const auto n = length(rng);
        const auto par = Executor::parallel(1 + trial % 5);
        const auto x = random_vector<T>(rng, n);
        const auto y = random_vector<T>(rng, n);
        const auto x_before = x;
        const auto scale_xy = max_abs(x) * max_abs(y);

        const auto d_ref = dot(x, y, ref);
        const auto d_par = dot(x, y, par);
        CHECK(std::abs(d_par - d_ref) <=
              8 * eps * static_cast<T>(std::max<size_type>(n, 1)) * scale_xy);
        CHECK(dot(x, y, ref) == dot(y, x, ref));

        const auto nrm = norm2(x, ref);
        const auto xx = dot(x, x, ref);
        CHECK(std::abs(nrm * nrm - xx) <= 4 * eps * xx);

        const T alpha = T(0.75);
        const T beta = T(-1.25);
        CHECK(axpy(alpha, x, y, par) == axpy(alpha, x, y, ref));
        auto z_ref = y;
        auto z_par = y;
        axpby(alpha, x, beta, z_ref, ref);
        axpby(alpha, x, beta, z_par, par);
        CHECK(z_par == z_ref);
        add_scaled(alpha, x, z_ref, ref);
        add_scaled(alpha, x, z_par, par);
        CHECK(z_par == z_ref);
        scale(beta, z_ref, ref);
        scale(beta, z_par, par);
        CHECK(z_par == z_ref);
        copy(x, z_par, par);
        CHECK(z_par == x);
        CHECK(x == x_before);
    }
}


TEST_CASE("parallel dot is reproducible across runs and thread counts")
{
    std::mt19937_64 rng(7);
    const auto x = random_vector<double>(rng, 100'003);
    const auto y = random_vector<double>(rng, 100'003);
    const auto first = dot(x, y, Executor::parallel(4));
    for (int threads = 1; threads <= 8; ++threads) {
        CHECK(dot(x, y, Executor::parallel(threads)) == first);
    }
}


TEST_CASE("error codes")
{
    CHECK(InvalidArgument("x").code() == ErrorCode::invalid_argument);
    CHECK(DimensionMismatch("dot", 1, 2).code() ==
          ErrorCode::dimension_mismatch);
    CHECK(ParseError(3, "bad").code() == ErrorCode::parse_error);
    CHECK(ParseError(3, "bad").line() == 3);
    CHECK(to_string(ErrorCode::overflow) == "Overflow");
}
