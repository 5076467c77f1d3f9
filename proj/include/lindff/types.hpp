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

// types.hpp: value types shared across the library

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lindff {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// --------------------------- ensemble specification -------------------------

enum class EnsembleKind { GUE, ComplexGinibre, RandomNormal, HaarUnitary };

// Identical (kind, dim, variance, seed) reproduces bit-identical matrices.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::ComplexGinibre;
    int dim = 0;                 // N >= 1
    double variance = 1.0;       // per-element variance scale v > 0
    std::uint64_t seed = 0;
};

inline void validate(const EnsembleSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("EnsembleSpec: dim must be >= 1");
    if (!(spec.variance > 0.0)) throw std::invalid_argument("EnsembleSpec: variance must be > 0");
}

// ------------------------------ superoperators ------------------------------

enum class SuperopKind { LvN, SimpleDissipator, MultiDissipator, Lindbladian, NonCrossingTruncation };

// Dense N^2 x N^2 matrix acting on row-major vectorized density matrices.
// rho_{ij} sits at flat index i*N + j, so (A kron B^T) vec(rho) = vec(A rho B).
struct Superoperator {
    int dim = 0;                 // system dimension N; matrix is N^2 x N^2
    SuperopKind kind = SuperopKind::Lindbladian;
    Matrix matrix;
};

// Hermitian within 1e-10, unit trace within 1e-10, min eigenvalue >= -1e-8.
struct DensityMatrix {
    int dim = 0;
    Matrix entries;
};

// -------------------------------- spectra -----------------------------------

struct ComplexSpectrum {
    int dim = 0;                            // number of eigenvalues D
    std::vector<Complex> values;
    double trace_defect = 0.0;              // |sum(values) - tr S| from the eigensolve
};

struct GapEstimate {
    double gap = 0.0;            // -max Re(z) over eigenvalues outside the zero cluster
    int zero_count = 0;
    double zero_tol = 0.0;
};

struct FormFactorSeries {
    std::vector<double> times;   // monotone, non-negative
    std::vector<double> values;  // ensemble mean of Re (1/D) sum_i exp(z_i t)
    std::vector<double> imags;   // residual imaginary part after conjugate-pair summation
    std::vector<double> stderrs; // per-point standard error of the mean (0 for one sample)
    int n_samples = 0;
    int dim = 0;                 // system dimension N
};

// -------------------------------- moments -----------------------------------

// Trace moments in both normalizations used throughout: values divides tr S^n
// by N^2, values_nm1 divides by N^2 - 1 (the matrix-moment convention).
struct MomentTable {
    std::vector<int> orders;
    std::vector<Complex> values;
    std::vector<Complex> values_nm1;
    std::vector<double> stderrs;
    int n_samples = 0;
    bool per_trace_norm = true;
};

// Projection of the averaged tensor <(D^n)_{(ij),(kl)}> onto
// A d_ik d_jl + B d_ij d_kl + C d_il d_jk.
struct MatrixMomentDecomposition {
    int order = 0;
    double A = 0.0, B = 0.0, C = 0.0;
    double A_stderr = 0.0, B_stderr = 0.0, C_stderr = 0.0;
    int n_samples = 0;
};

// ----------------------------- analytic curves ------------------------------

struct DensityCurve {
    std::vector<double> grid;
    std::vector<double> values;  // >= 0; integrates to 1 over support
    double support_lower = 0.0;
    double support_upper = 0.0;
};

struct GapCurve {
    std::vector<double> gammas;
    std::vector<double> x_min;           // > 0 on gamma in (0, inf)
    std::vector<std::string> diagnostics; // bracketing anchor used per point
};

// ------------------------------- specfun ------------------------------------

struct SeriesEvalReport {
    double value = 0.0;
    int terms_used = 0;
    double est_error = 0.0;      // relative; raised above the request triggers an error
};

}  // namespace lindff
