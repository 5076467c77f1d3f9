// Copyright 2026 The lindff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lapack.hpp: dense non-Hermitian eigensolve via LAPACKE zgeev

#pragma once

#include <lindff/types.hpp>

#include <complex>

// The shipped lapack.h only honors a pre-defined complex type, not the
// LAPACK_COMPLEX_CPP switch documented elsewhere.
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace lindff {

// All eigenvalues of a general complex matrix (eigenvectors skipped). The
// blocked LAPACK path keeps dimension-3600 solves under a minute; Eigen's
// unblocked Schur iteration is an order of magnitude slower there.
inline Vector eigenvalues_dense(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("eigenvalues_dense: matrix must be square");
    const lapack_int n = lapack_int(A.rows());
    Matrix work = A;  // zgeev overwrites its input
    Vector w(n);
    const lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, w.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("eigenvalues_dense: zgeev failed with info = " + std::to_string(info) +
                                 (info > 0 ? " (QR iteration did not converge; matrix may be badly scaled)"
                                           : " (illegal argument)"));
    return w;
}

// All eigenvalues of a general real matrix. dgeev moves a quarter of the data
// zgeev does at equal dimension, which is the difference between minutes and
// hours over a 100-sample sweep of dimension-3600 generators.
inline Vector eigenvalues_dense_real(const RealMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("eigenvalues_dense_real: matrix must be square");
    const lapack_int n = lapack_int(A.rows());
    RealMatrix work = A;  // dgeev overwrites its input
    RealVector wr(n), wi(n);
    const lapack_int info = LAPACKE_dgeev(
        LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n, wr.data(), wi.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("eigenvalues_dense_real: dgeev failed with info = " + std::to_string(info) +
                                 (info > 0 ? " (QR iteration did not converge; matrix may be badly scaled)"
                                           : " (illegal argument)"));
    Vector w(n);
    for (lapack_int k = 0; k < n; ++k) w(k) = Complex(wr(k), wi(k));
    return w;
}

}  // namespace lindff
