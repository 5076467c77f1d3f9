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

// ensembles.hpp: seeded samplers for GUE, complex Ginibre, random normal,
// and Haar unitary matrices

#pragma once

#include <lindff/lapack.hpp>
#include <lindff/rng.hpp>
#include <lindff/types.hpp>

#include <cmath>
#include <stdexcept>

namespace lindff {

namespace detail {

// N x N with i.i.d. complex Gaussian entries, <|a_ij|^2> = entry_var,
// real and imaginary parts independent with variance entry_var / 2.
// Column-major fill order fixes the bit pattern for a given stream.
inline Matrix gaussian_complex(int n, double entry_var, Xoshiro256pp& rng) {
    const double scale = std::sqrt(0.5 * entry_var);
    Matrix out(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double re, im;
            rng.normal_pair(re, im);
            out(i, j) = Complex(scale * re, scale * im);
        }
    return out;
}

}  // namespace detail

// ------------------------------ GUE ------------------------------------------

// H = (A + A^dag) / sqrt(2) with A complex Ginibre: hermitian exactly, all
// entries (including the real diagonal) carry <|H_ij|^2> = v / N.
inline Matrix sample_gue(const EnsembleSpec& spec) {
    validate(spec);
    if (spec.kind != EnsembleKind::GUE) throw std::invalid_argument("sample_gue: spec.kind mismatch");
    Xoshiro256pp rng(spec.seed);
    const Matrix a = detail::gaussian_complex(spec.dim, spec.variance / double(spec.dim), rng);
    Matrix h = a + a.adjoint();
    h *= 1.0 / std::sqrt(2.0);
    // Symmetric construction leaves roundoff asymmetry of exactly zero;
    // enforce the real diagonal explicitly.
    for (int i = 0; i < spec.dim; ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
    return h;
}

// ---------------------------- complex Ginibre --------------------------------

inline Matrix sample_ginibre(const EnsembleSpec& spec) {
    validate(spec);
    if (spec.kind != EnsembleKind::ComplexGinibre)
        throw std::invalid_argument("sample_ginibre: spec.kind mismatch");
    Xoshiro256pp rng(spec.seed);
    return detail::gaussian_complex(spec.dim, spec.variance / double(spec.dim), rng);
}

// ----------------------------- Haar unitary ----------------------------------

// QR of a Ginibre matrix with the R-diagonal phase fix; exactly Haar and
// invariant under left multiplication by fixed unitaries.
inline Matrix sample_haar_unitary(const EnsembleSpec& spec) {
    validate(spec);
    if (spec.kind != EnsembleKind::HaarUnitary)
        throw std::invalid_argument("sample_haar_unitary: spec.kind mismatch");
    Xoshiro256pp rng(spec.seed);
    const Matrix z = detail::gaussian_complex(spec.dim, 1.0, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < spec.dim; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= (mag > 0.0 ? rjj / mag : Complex(1.0, 0.0));
    }
    return q;
}

// ----------------------------- random normal ---------------------------------

// U diag(tau) U^dag with tau the eigenvalues of an independent complex Ginibre
// draw and U Haar: reproduces the normal-matrix eigenvalue law exactly while
// [L, L^dag] vanishes by construction.
inline Matrix sample_normal(const EnsembleSpec& spec) {
    validate(spec);
    if (spec.kind != EnsembleKind::RandomNormal)
        throw std::invalid_argument("sample_normal: spec.kind mismatch");
    EnsembleSpec gin{EnsembleKind::ComplexGinibre, spec.dim, spec.variance, subseed(spec.seed, 0)};
    EnsembleSpec haar{EnsembleKind::HaarUnitary, spec.dim, 1.0, subseed(spec.seed, 1)};
    const Vector taus = eigenvalues_dense(sample_ginibre(gin));
    const Matrix u = sample_haar_unitary(haar);
    return u * taus.asDiagonal() * u.adjoint();
}

// Dispatch on spec.kind; the jump-operator entry point used by experiment
// builders.
inline Matrix sample(const EnsembleSpec& spec) {
    switch (spec.kind) {
        case EnsembleKind::GUE: return sample_gue(spec);
        case EnsembleKind::ComplexGinibre: return sample_ginibre(spec);
        case EnsembleKind::RandomNormal: return sample_normal(spec);
        case EnsembleKind::HaarUnitary: return sample_haar_unitary(spec);
    }
    throw std::invalid_argument("sample: unknown ensemble kind");
}

}  // namespace lindff
