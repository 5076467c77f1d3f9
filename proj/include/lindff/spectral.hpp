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

// spectral.hpp: generator spectra, dissipative gaps, and form-factor series
// built from eigenvalues (one decomposition serves every time point)

#pragma once

#include <lindff/lapack.hpp>
#include <lindff/numerics.hpp>
#include <lindff/superop.hpp>
#include <lindff/types.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lindff {

// ------------------------------- eigenvalues ---------------------------------

inline ComplexSpectrum eigenvalues(const Superoperator& s) {
    const int d = s.dim * s.dim;
    if (int(s.matrix.rows()) != d || int(s.matrix.cols()) != d)
        throw std::invalid_argument("eigenvalues: matrix is not dim^2 x dim^2");
    if (!s.matrix.allFinite()) throw std::invalid_argument("eigenvalues: non-finite entries");
    ComplexSpectrum sp;
    sp.dim = d;
    const Vector vals = eigenvalues_dense(s.matrix);
    sp.values.assign(vals.data(), vals.data() + d);
    const Complex tr = s.matrix.trace();
    const Complex sum = std::accumulate(sp.values.begin(), sp.values.end(), Complex(0.0, 0.0));
    sp.trace_defect = std::abs(sum - tr);
    const double scale = s.matrix.cwiseAbs().maxCoeff();
    if (sp.trace_defect > 1e-8 * d * std::max(scale, 1e-300))
        throw std::runtime_error("eigenvalues: eigenvalue sum disagrees with trace (defect " +
                                 std::to_string(sp.trace_defect) + ")");
    return sp;
}

// Generators built from hermitian H and jump terms send hermitian matrices to
// hermitian matrices, so in the orthonormal hermitian basis
// {e_kk, (e_kl + e_lk)/sqrt2, i(e_lk - e_kl)/sqrt2} the superoperator matrix is
// real and similar to the complex form (imaginary residue is roundoff-sized).
// The basis map has two nonzeros per column, so the conjugation is O(d^2) and
// the eigensolve drops to dgeev at a quarter of the zgeev cost.
inline ComplexSpectrum eigenvalues_real_form(const Superoperator& s) {
    const int n = s.dim;
    const int d = n * n;
    if (int(s.matrix.rows()) != d || int(s.matrix.cols()) != d)
        throw std::invalid_argument("eigenvalues_real_form: matrix is not dim^2 x dim^2");
    if (!s.matrix.allFinite()) throw std::invalid_argument("eigenvalues_real_form: non-finite entries");
    const Complex im(0.0, 1.0);
    const double inv_rt2 = 1.0 / std::sqrt(2.0);
    // T = M P, with P's columns the vectorized basis elements.
    Matrix t(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int a = i * n + j;
            if (i == j) t.col(a) = s.matrix.col(a);
            else if (i < j)
                t.col(a) = inv_rt2 * (s.matrix.col(i * n + j) + s.matrix.col(j * n + i));
            else
                t.col(a) = (im * inv_rt2) * (s.matrix.col(j * n + i) - s.matrix.col(i * n + j));
        }
    // R = P^dag T; each row of P^dag again touches two rows of T.
    RealMatrix r(d, d);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int b = k * n + l;
            if (k == l) r.row(b) = t.row(b).real();
            else if (k < l)
                r.row(b) = (inv_rt2 * (t.row(k * n + l) + t.row(l * n + k))).real();
            else
                r.row(b) = ((-im * inv_rt2) * (t.row(l * n + k) - t.row(k * n + l))).real();
        }
    ComplexSpectrum sp;
    sp.dim = d;
    const Vector vals = eigenvalues_dense_real(r);
    sp.values.assign(vals.data(), vals.data() + d);
    const double tr = r.trace();
    const Complex sum = std::accumulate(sp.values.begin(), sp.values.end(), Complex(0.0, 0.0));
    sp.trace_defect = std::abs(sum - tr);
    const double scale = std::max(r.cwiseAbs().maxCoeff(), 1e-300);
    if (sp.trace_defect > 1e-8 * d * scale)
        throw std::runtime_error("eigenvalues_real_form: eigenvalue sum disagrees with trace (defect " +
                                 std::to_string(sp.trace_defect) + ")");
    return sp;
}

// 1e-8 x spectral radius; separates the exact zero modes from decaying ones.
inline double default_zero_tol(const ComplexSpectrum& sp) {
    double radius = 0.0;
    for (const Complex& z : sp.values) radius = std::max(radius, std::abs(z));
    return 1e-8 * radius;
}

// ------------------------------- spectral gap ---------------------------------

inline GapEstimate spectral_gap(const ComplexSpectrum& sp, double zero_tol) {
    GapEstimate g;
    g.zero_tol = zero_tol;
    double max_re = -std::numeric_limits<double>::infinity();
    for (const Complex& z : sp.values) {
        if (std::abs(z) <= zero_tol) {
            ++g.zero_count;
            continue;
        }
        // Nonzero eigenvalues hugging the imaginary axis have no decay rate to
        // report; surface them instead of folding them into the gap.
        if (std::abs(z.real()) <= zero_tol)
            throw std::domain_error("spectral_gap: eigenvalue " + std::to_string(z.real()) + "+" +
                                    std::to_string(z.imag()) + "i is nonzero but purely imaginary");
        max_re = std::max(max_re, z.real());
    }
    if (g.zero_count == int(sp.values.size()))
        throw std::domain_error("spectral_gap: spectrum entirely degenerate at zero");
    g.gap = -max_re;
    return g;
}

inline GapEstimate spectral_gap(const ComplexSpectrum& sp) {
    return spectral_gap(sp, default_zero_tol(sp));
}

// ---------------------------- form-factor series -------------------------------

// (1/D) sum_i exp(z_i t) per grid point, exponential terms summed by ascending
// real part so the large-t survivors are accumulated last.
inline FormFactorSeries dff_from_spectrum(const ComplexSpectrum& sp, const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("dff_from_spectrum: empty time grid");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] >= 0.0)) throw std::invalid_argument("dff_from_spectrum: times must be >= 0");
        if (k > 0 && times[k] < times[k - 1])
            throw std::invalid_argument("dff_from_spectrum: times must be non-decreasing");
    }
    const double tol = default_zero_tol(sp);
    for (const Complex& z : sp.values)
        if (z.real() > tol)
            throw std::domain_error("dff_from_spectrum: eigenvalue with positive real part " +
                                    std::to_string(z.real()) + " (non-dissipative spectrum)");
    std::vector<Complex> sorted = sp.values;
    std::sort(sorted.begin(), sorted.end(),
              [](const Complex& a, const Complex& b) { return a.real() < b.real(); });

    const int d = int(sorted.size());
    const int n = int(std::lround(std::sqrt(double(d))));
    FormFactorSeries out;
    out.times = times;
    out.n_samples = 1;
    out.dim = (n * n == d) ? n : 0;
    out.values.reserve(times.size());
    out.imags.reserve(times.size());
    out.stderrs.assign(times.size(), 0.0);
    for (double t : times) {
        Complex acc(0.0, 0.0);
        for (const Complex& z : sorted) acc += std::exp(z * t);
        acc /= double(d);
        if (std::abs(acc.imag()) > 1e-8)
            throw std::runtime_error("dff_from_spectrum: imaginary residual " +
                                     std::to_string(acc.imag()) + " at t = " + std::to_string(t));
        out.values.push_back(acc.real());
        out.imags.push_back(acc.imag());
    }
    return out;
}

// ------------------------- closed-form dissipator spectra ----------------------

// z_ij = -|tau_i|^2 - |tau_j|^2 + 2 tau_i conj(tau_j) for a normal jump
// operator with eigenvalues tau; the N diagonal entries are exact zeros.
inline ComplexSpectrum normal_dissipator_spectrum(const std::vector<Complex>& taus) {
    const int n = int(taus.size());
    if (n < 1) throw std::invalid_argument("normal_dissipator_spectrum: need at least one eigenvalue");
    ComplexSpectrum sp;
    sp.dim = n * n;
    sp.values.reserve(sp.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                sp.values.emplace_back(0.0, 0.0);
                continue;
            }
            const double mi = std::norm(taus[i]), mj = std::norm(taus[j]);
            sp.values.push_back(Complex(-mi - mj, 0.0) + 2.0 * taus[i] * std::conj(taus[j]));
        }
    return sp;
}

// z_ij = -(tau_i - tau_j)^2 for a hermitian jump operator: real, non-positive.
inline ComplexSpectrum hermitian_dissipator_spectrum(const std::vector<double>& taus) {
    const int n = int(taus.size());
    if (n < 1) throw std::invalid_argument("hermitian_dissipator_spectrum: need at least one eigenvalue");
    ComplexSpectrum sp;
    sp.dim = n * n;
    sp.values.reserve(sp.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = taus[i] - taus[j];
            sp.values.emplace_back(-d * d, 0.0);
        }
    return sp;
}

// ------------------------------ ensemble averages ------------------------------

// builder(sample_index) -> ComplexSpectrum. Samples are reduced in index order
// so the result is identical however the eigensolves are scheduled.
template <class SpectrumBuilder>
FormFactorSeries ensemble_dff(SpectrumBuilder&& builder, const std::vector<double>& times,
                              int n_samples) {
    if (n_samples < 1) throw std::invalid_argument("ensemble_dff: n_samples must be >= 1");
    std::vector<RunningStats> stats(times.size());
    std::vector<double> worst_imag(times.size(), 0.0);
    int dim = 0;
    for (int s = 0; s < n_samples; ++s) {
        FormFactorSeries one;
        try {
            one = dff_from_spectrum(builder(s), times);
        } catch (const std::exception& e) {
            throw std::runtime_error("ensemble_dff: sample " + std::to_string(s) + ": " + e.what());
        }
        if (s == 0) dim = one.dim;
        for (std::size_t k = 0; k < times.size(); ++k) {
            stats[k].add(one.values[k]);
            worst_imag[k] = std::max(worst_imag[k], std::abs(one.imags[k]));
        }
    }
    FormFactorSeries out;
    out.times = times;
    out.n_samples = n_samples;
    out.dim = dim;
    out.values.reserve(times.size());
    out.imags = worst_imag;
    out.stderrs.reserve(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        out.values.push_back(stats[k].mean());
        out.stderrs.push_back(n_samples > 1 ? stats[k].stderr_mean() : 0.0);
    }
    return out;
}

// ------------------------------ derived observables ----------------------------

// Average fidelity of an initial pure state: (1 + N F)/(N + 1).
inline double fidelity_from_dff(double f, int n) {
    if (n < 1) throw std::invalid_argument("fidelity_from_dff: N must be >= 1");
    if (f < -0.1 || f > 1.1)
        throw std::invalid_argument("fidelity_from_dff: F outside [0,1] beyond sampling slack");
    return (1.0 + n * f) / (n + 1.0);
}

// Autocorrelation of a non-degenerate observable: (N^2 F - 1)/(N^2 - 1) * C0.
inline double autocorr_from_dff(double f, int n, double c0) {
    if (n < 2) throw std::invalid_argument("autocorr_from_dff: N must be >= 2");
    const double d2 = double(n) * double(n);
    return (d2 * f - 1.0) / (d2 - 1.0) * c0;
}

// builder(dim, sample_index) -> ComplexSpectrum; returns (N, Var[F(t)]) rows.
template <class SpectrumBuilder>
std::vector<std::pair<int, double>> self_averaging_test(SpectrumBuilder&& builder,
                                                        const std::vector<int>& dims, double t,
                                                        int n_samples) {
    if (!(t > 0.0)) throw std::invalid_argument("self_averaging_test: t must be > 0");
    if (n_samples < 2) throw std::invalid_argument("self_averaging_test: need n_samples >= 2");
    const std::vector<double> grid{t};
    std::vector<std::pair<int, double>> table;
    table.reserve(dims.size());
    for (int n : dims) {
        RunningStats acc;
        for (int s = 0; s < n_samples; ++s)
            acc.add(dff_from_spectrum(builder(n, s), grid).values[0]);
        table.emplace_back(n, acc.variance());
    }
    return table;
}

}  // namespace lindff
