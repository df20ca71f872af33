// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <vector>

#include <psl/core/error.hpp>
#include <psl/formats/catalog.hpp>
#include <psl/formats/conversion.hpp>
#include <psl/formats/footprint.hpp>

#include "oracles.hpp"


using namespace psl;


TEST_CASE("COO construction validates its invariants")
{
    CHECK_NOTHROW(CooMatrix<double>(2, 2, {0, 0, 1}, {0, 1, 1}, {1, 2, 3}));
    // unsorted
    CHECK_THROWS_AS(CooMatrix<double>(2, 2, {1, 0}, {0, 0}, {1, 2}),
                    InvalidArgument);
    // duplicate
    CHECK_THROWS_AS(CooMatrix<double>(2, 2, {0, 0}, {1, 1}, {1, 2}),
                    InvalidArgument);
    // out of range
    CHECK_THROWS_AS(CooMatrix<double>(2, 2, {0, 2}, {0, 0}, {1, 2}),
                    IndexOutOfRange);
    CHECK_THROWS_AS(CooMatrix<double>(2, 2, {0}, {-1}, {1}), IndexOutOfRange);
    // ragged arrays
    CHECK_THROWS_AS(CooMatrix<double>(2, 2, {0}, {0, 1}, {1}),
                    InvalidArgument);
    // 32-bit index limit
    CHECK_THROWS_AS(CooMatrix<double>(size_type{1} << 31, 1, {}, {}, {}),
                    Overflow);
}


TEST_CASE("from_triplets sorts and sums duplicates")
{
    const auto m = CooMatrix<double>::from_triplets(
        3, 3, {{2, 0, 1.0}, {0, 1, 2.0}, {2, 0, 0.5}, {0, 0, 3.0},
               {1, 2, 0.0}});
    CHECK(std::vector<index_type>(m.row_idxs().begin(), m.row_idxs().end()) ==
          std::vector<index_type>{0, 0, 1, 2});
    CHECK(std::vector<index_type>(m.col_idxs().begin(), m.col_idxs().end()) ==
          std::vector<index_type>{0, 1, 2, 0});
    CHECK(std::vector<double>(m.values().begin(), m.values().end()) ==
          std::vector<double>{3.0, 2.0, 0.0, 1.5});
}


TEST_CASE("CSR construction validates its invariants")
{
    CHECK_NOTHROW(CsrMatrix<double>(2, 2, {0, 2, 3}, {0, 1, 1}, {1, 2, 3}));
    CHECK_THROWS_AS(CsrMatrix<double>(2, 2, {1, 2, 3}, {0, 1, 1}, {1, 2, 3}),
                    InvalidArgument);
    CHECK_THROWS_AS(CsrMatrix<double>(2, 2, {0, 2, 2}, {0, 1, 1}, {1, 2, 3}),
                    InvalidArgument);
    CHECK_THROWS_AS(CsrMatrix<double>(2, 2, {0, 2, 1, 3}, {0, 1, 1},
                                      {1, 2, 3}),
                    InvalidArgument);
    // columns out of order within a row
    CHECK_THROWS_AS(CsrMatrix<double>(2, 2, {0, 2, 3}, {1, 0, 1}, {1, 2, 3}),
                    InvalidArgument);
    CHECK_THROWS_AS(CsrMatrix<double>(2, 2, {0, 2, 3}, {0, 2, 1}, {1, 2, 3}),
                    IndexOutOfRange);
}


TEST_CASE("coo_to_csr examples")
{
    auto row_ptrs = [](const CsrMatrix<double>& m) {
        return std::vector<index_type>(m.row_ptrs().begin(),
                                       m.row_ptrs().end());
    };
    CHECK(row_ptrs(coo_to_csr(CooMatrix<double>(2, 2, {0, 0, 1}, {0, 1, 1},
                                                {1, 1, 1}))) ==
          std::vector<index_type>{0, 2, 3});
    CHECK(row_ptrs(coo_to_csr(CooMatrix<double>(3, 3, {}, {}, {}))) ==
          std::vector<index_type>{0, 0, 0, 0});
    CHECK(row_ptrs(coo_to_csr(CooMatrix<double>(3, 3, {2}, {0}, {1}))) ==
          std::vector<index_type>{0, 0, 0, 1});
}


TEST_CASE("csr_to_coo examples")
{
    const auto coo =
        csr_to_coo(CsrMatrix<double>(2, 2, {0, 2, 3}, {0, 1, 1}, {1, 2, 3}));
    CHECK(std::vector<index_type>(coo.row_idxs().begin(),
                                  coo.row_idxs().end()) ==
          std::vector<index_type>{0, 0, 1});

    const auto eye = csr_to_coo(coo_to_csr(test::identity<double>(4)));
    CHECK(std::vector<index_type>(eye.row_idxs().begin(),
                                  eye.row_idxs().end()) ==
          std::vector<index_type>(eye.col_idxs().begin(),
                                  eye.col_idxs().end()));

    const auto empty = csr_to_coo(CsrMatrix<float>(3, 5, {0, 0, 0, 0}, {}, {}));
    CHECK(empty.nnz() == 0);
    CHECK(empty.row_idxs().empty());
    CHECK(empty.num_rows() == 3);
    CHECK(empty.num_cols() == 5);
}


TEST_CASE_TEMPLATE("conversion round trip is exact", T, float, double)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<size_type> dim(1, 80);
    std::uniform_real_distribution<double> density(0.0, 0.4);
    for (int trial = 0; trial < 120; ++trial) {
        const auto m = test::random_coo<T>(rng, dim(rng), dim(rng),
                                           density(rng));
        const auto csr = coo_to_csr(m);
        CHECK(csr_to_coo(csr) == m);
        CHECK(coo_to_csr(csr_to_coo(csr)) == csr);
    }
}


TEST_CASE("footprint accounting")
{
    using enum FootprintMode;
    CHECK(footprint_bytes(Format::csr, 1, Precision::f64, simplified) == 12);
    CHECK(footprint_bytes(Format::csr, 1, Precision::f32, simplified) == 8);
    CHECK(footprint_bytes(Format::coo, 1, Precision::f64, simplified) == 16);
    CHECK(footprint_bytes(Format::coo, 1, Precision::f32, simplified) == 12);
    CHECK(footprint_bytes(Format::csr, 0, Precision::f64, simplified) == 0);

    // values + indices, row pointers, then x read and y written once
    CHECK(footprint_bytes(Format::csr, 10, Precision::f64, full, 4, 5) ==
          10 * 12 + 5 * 4 + (4 + 5) * 8);
    CHECK(footprint_bytes(Format::coo, 10, Precision::f32, full, 4, 5) ==
          10 * 12 + (4 + 5) * 4);
    // square by default
    CHECK(footprint_bytes(Format::coo, 10, Precision::f64, full, 4) ==
          10 * 16 + 8 * 8);

    for (const auto p : {Precision::f32, Precision::f64}) {
        for (std::uint64_t nz : {0u, 1u, 17u, 20'316'253u}) {
            CHECK(footprint_bytes(Format::coo, nz, p, simplified) -
                      footprint_bytes(Format::csr, nz, p, simplified) ==
                  nz * index_bytes);
        }
    }
    CHECK(parse_format("csr") == Format::csr);
    CHECK(parse_format("coo") == Format::coo);
    CHECK_FALSE(parse_format("ell"));
}


TEST_CASE("test matrix catalog")
{
    CHECK(solver_test_matrices().size() == 10);
    const auto rajat = find_test_matrix("rajat31");
    REQUIRE(rajat);
    CHECK(rajat->n == 4'690'002);
    CHECK(rajat->nz == 20'316'253);
    const auto thermal = find_test_matrix("thermal2");
    REQUIRE(thermal);
    CHECK(thermal->nz == 8'580'313);
    const auto nlpkkt = find_test_matrix("nlpkkt160");
    REQUIRE(nlpkkt);
    CHECK(nlpkkt->nz == 225'422'112);
    CHECK_FALSE(find_test_matrix("unknown"));
}
