// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <psl/formats/coo.hpp>
#include <psl/formats/csr.hpp>


namespace psl {


/// Row pointers come from a prefix sum over the per-row entry counts.
template <Scalar T>
CsrMatrix<T> coo_to_csr(const CooMatrix<T>& m);

/// Exact inverse of coo_to_csr.
template <Scalar T>
CooMatrix<T> csr_to_coo(const CsrMatrix<T>& m);


}  // namespace psl
