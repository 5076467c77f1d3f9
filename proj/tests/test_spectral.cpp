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

#include <lindff/ensembles.hpp>
#include <lindff/moments.hpp>
#include <lindff/spectral.hpp>
#include <lindff/superop.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

using namespace lindff;

namespace {

// Multiset match: each value pairs with the nearest unused partner. Plain
// lexicographic sorting would misalign conjugate pairs whose real parts tie
// only up to roundoff.
void require_same_spectrum(const std::vector<Complex>& a, const std::vector<Complex>& b,
                           double tol) {
    REQUIRE(a.size() == b.size());
    std::vector<bool> used(b.size(), false);
    for (const Complex& z : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        REQUIRE(best_d < tol);
        used[best] = true;
    }
}

}  // namespace

// ------------------------------- dense spectra ---------------------------------

TEST_CASE("lowering-operator Lindbladian has spectrum {0, -1, -1, -2}") {
    Matrix lowering = Matrix::Zero(2, 2);
    lowering(1, 0) = 1.0;  // |0><1| in the row-major basis used here
    // With D = 2 L rho L^dag - {L^dag L, rho}, unit rate empties the
    // populations at rate 2 and the coherences at rate 1.
    const Superoperator s = lindbladian(Matrix::Zero(2, 2), {lowering}, {1.0});
    const ComplexSpectrum sp = eigenvalues(s);
    require_same_spectrum(sp.values,
                          {Complex(0, 0), Complex(-1, 0), Complex(-1, 0), Complex(-2, 0)}, 1e-12);
    REQUIRE(sp.trace_defect < 1e-12);
}

TEST_CASE("eigenvalues checks the trace against the eigenvalue sum") {
    const Matrix l = sample_ginibre({EnsembleKind::ComplexGinibre, 8, 1.0, 31ull});
    const ComplexSpectrum sp = eigenvalues(simple_dissipator(l));
    REQUIRE(sp.dim == 64);  // eigenvalue count, N^2
    REQUIRE(int(sp.values.size()) == 64);
    REQUIRE(sp.trace_defect < 1e-10);
}

TEST_CASE("spectra close under conjugation for hermiticity-preserving generators") {
    const Matrix h = sample_gue({EnsembleKind::GUE, 5, 1.0, 32ull});
    const Matrix l = sample_ginibre({EnsembleKind::ComplexGinibre, 5, 1.0, 33ull});
    const Superoperator s = lindbladian(h, {l}, {1.2});
    const ComplexSpectrum sp = eigenvalues(s);
    const double scale = s.matrix.cwiseAbs().maxCoeff();
    for (const Complex& z : sp.values) {
        double best = 1e300;
        for (const Complex& w : sp.values) best = std::min(best, std::abs(w - std::conj(z)));
        REQUIRE(best < 1e-8 * scale);
    }
}

// ------------------------------ fast-path spectra -------------------------------

TEST_CASE("normal_dissipator_spectrum pins the two-level example") {
    const auto sp = normal_dissipator_spectrum({Complex(1, 0), Complex(0, 1)});
    // z_ij = -|t_i|^2 - |t_j|^2 + 2 t_i conj(t_j): diagonal zeros exact,
    // off-diagonal -2 -+ 2i.
    require_same_spectrum(sp.values,
                          {Complex(0, 0), Complex(0, 0), Complex(-2, -2), Complex(-2, 2)}, 1e-14);
    REQUIRE(sp.values.size() == 4);
}

TEST_CASE("normal fast path equals the dense eigensolve") {
    const int n = 16;
    const EnsembleSpec gin{EnsembleKind::ComplexGinibre, n, 1.0, 34ull};
    const Vector taus = eigenvalues_dense(sample_ginibre(gin));
    const auto fast = normal_dissipator_spectrum(std::vector<Complex>(taus.data(), taus.data() + n));

    // Same spectrum as the N^2 x N^2 dissipator of the normal matrix built
    // from these eigenvalues with any unitary.
    const EnsembleSpec norm_spec{EnsembleKind::RandomNormal, n, 1.0, 34ull};
    const Matrix a = sample_normal(norm_spec);  // tau drawn from subseed(34, 0)...
    const EnsembleSpec gin_check{EnsembleKind::ComplexGinibre, n, 1.0, subseed(34ull, 0)};
    const Vector taus_check = eigenvalues_dense(sample_ginibre(gin_check));
    const auto fast_check = normal_dissipator_spectrum(
        std::vector<Complex>(taus_check.data(), taus_check.data() + n));
    const auto dense = eigenvalues(simple_dissipator(a));
    require_same_spectrum(fast_check.values, dense.values, 1e-7);

    REQUIRE(int(fast.values.size()) == n * n);
}

TEST_CASE("hermitian fast path equals the dense eigensolve") {
    const int n = 12;
    const EnsembleSpec spec{EnsembleKind::GUE, n, 1.0, 35ull};
    const Matrix h = sample_gue(spec);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    const RealVector taus = es.eigenvalues();
    const auto fast =
        hermitian_dissipator_spectrum(std::vector<double>(taus.data(), taus.data() + n));
    const auto dense = eigenvalues(simple_dissipator(h));
    require_same_spectrum(fast.values, dense.values, 1e-8);
    // z_ij = -(t_i - t_j)^2: all real and non-positive, N exact zeros.
    int zeros = 0;
    for (const Complex& z : fast.values) {
        REQUIRE(z.imag() == 0.0);
        REQUIRE(z.real() <= 0.0);
        if (z == Complex(0, 0)) ++zeros;
    }
    REQUIRE(zeros == n);
}

// -------------------------------- spectral gap ----------------------------------

TEST_CASE("spectral_gap separates the zero cluster from the decaying part") {
    ComplexSpectrum sp;
    sp.dim = 2;
    sp.values = {Complex(0, 0), Complex(-0.3, 1.0), Complex(-0.3, -1.0), Complex(-0.5, 0)};
    const GapEstimate g = spectral_gap(sp, 1e-8);
    REQUIRE(g.gap == Catch::Approx(0.3).epsilon(1e-12));
    REQUIRE(g.zero_count == 1);

    sp.values = {Complex(0, 0), Complex(1e-12, 2e-13), Complex(-0.2, 0), Complex(-0.9, 0)};
    const GapEstimate g2 = spectral_gap(sp, 1e-8);
    REQUIRE(g2.gap == Catch::Approx(0.2).epsilon(1e-12));
    REQUIRE(g2.zero_count == 2);
}

TEST_CASE("spectral_gap rejects pathological spectra") {
    ComplexSpectrum sp;
    sp.dim = 2;
    // a nonzero purely imaginary mode: no well-defined dissipative gap
    sp.values = {Complex(0, 0), Complex(0, 1.0), Complex(-0.5, 0), Complex(-1, 0)};
    REQUIRE_THROWS_AS(spectral_gap(sp, 1e-8), std::domain_error);
    // everything inside the zero cluster
    sp.values = {Complex(0, 0), Complex(1e-14, 0), Complex(0, 1e-14), Complex(-1e-14, 0)};
    REQUIRE_THROWS(spectral_gap(sp, 1e-8));
}

TEST_CASE("default zero tolerance scales with the spectral radius") {
    ComplexSpectrum sp;
    sp.dim = 2;
    sp.values = {Complex(0, 0), Complex(-200.0, 0), Complex(-1e-7, 0), Complex(-100, 0)};
    // 1e-7 < 1e-8 * 200: inside the cluster under the default tolerance
    const GapEstimate g = spectral_gap(sp);
    REQUIRE(g.zero_count == 2);
    REQUIRE(g.gap == Catch::Approx(100.0));
}

// ----------------------------- form factor series -------------------------------

TEST_CASE("dff_from_spectrum evaluates the exact two-mode series") {
    ComplexSpectrum sp;
    sp.dim = 0;
    sp.values = {Complex(0, 0), Complex(-1, 0)};
    const std::vector<double> times{0.0, 0.5, 1.0, 2.0};
    const FormFactorSeries ff = dff_from_spectrum(sp, times);
    REQUIRE(ff.values[0] == 1.0);  // integer count at t = 0
    for (std::size_t k = 1; k < times.size(); ++k)
        REQUIRE(ff.values[k] == Catch::Approx(0.5 * (1.0 + std::exp(-times[k]))).epsilon(1e-15));
    REQUIRE(ff.n_samples == 1);
}

TEST_CASE("dff_from_spectrum rejects invalid grids and spectra") {
    ComplexSpectrum sp;
    sp.dim = 0;
    sp.values = {Complex(0, 0), Complex(-1, 0)};
    REQUIRE_THROWS(dff_from_spectrum(sp, {}));
    REQUIRE_THROWS(dff_from_spectrum(sp, {1.0, 0.5}));         // decreasing
    REQUIRE_THROWS(dff_from_spectrum(sp, {-1.0, 0.5}));        // negative
    sp.values = {Complex(0, 0), Complex(0.5, 0)};
    REQUIRE_THROWS_AS(dff_from_spectrum(sp, {0.0, 1.0}), std::domain_error);  // growing mode
}

TEST_CASE("dff_from_spectrum matches the matrix-exponential trace at N <= 4") {
    for (int n : {2, 3, 4}) {
        const Matrix h = sample_gue({EnsembleKind::GUE, n, 1.0, std::uint64_t(40 + n)});
        const Matrix l =
            sample_ginibre({EnsembleKind::ComplexGinibre, n, 1.0, std::uint64_t(50 + n)});
        const Superoperator s = lindbladian(h, {l}, {0.7});
        const ComplexSpectrum sp = eigenvalues(s);
        const std::vector<double> times{0.1, 0.6, 1.3, 2.9};
        const FormFactorSeries ff = dff_from_spectrum(sp, times);
        for (std::size_t k = 0; k < times.size(); ++k) {
            const Matrix expm = (times[k] * s.matrix).exp();
            const double oracle = expm.trace().real() / double(n * n);
            REQUIRE(std::abs(ff.values[k] - oracle) < 1e-9);
        }
    }
}

TEST_CASE("the short-time slope of the form factor is the first trace moment") {
    const int n = 6;
    const Matrix h = sample_gue({EnsembleKind::GUE, n, 1.0, 60ull});
    const Matrix l = sample_ginibre({EnsembleKind::ComplexGinibre, n, 1.0, 61ull});
    const Superoperator s = lindbladian(h, {l}, {1.0});
    const ComplexSpectrum sp = eigenvalues(s);
    const double dt = 1e-6;
    const FormFactorSeries ff = dff_from_spectrum(sp, {0.0, dt});
    const double slope = (ff.values[1] - ff.values[0]) / dt;
    const double mu1 = trace_moment(s, 1).real();
    REQUIRE(std::abs(slope - mu1) < 1e-4 * std::abs(mu1));
}

// ------------------------------ ensemble averaging ------------------------------

TEST_CASE("ensemble_dff accumulates mean and stderr over samples") {
    // Two synthetic spectra alternating by sample index: exact hand statistics.
    auto builder = [](int sample) {
        ComplexSpectrum sp;
        sp.dim = 0;
        sp.values = (sample % 2 == 0)
                        ? std::vector<Complex>{Complex(0, 0), Complex(0, 0)}
                        : std::vector<Complex>{Complex(-1, 0), Complex(-1, 0)};
        return sp;
    };
    const std::vector<double> times{1.0};
    const FormFactorSeries ff = ensemble_dff(builder, times, 4);
    const double f_even = 1.0, f_odd = std::exp(-1.0);
    const double mean = 0.5 * (f_even + f_odd);
    REQUIRE(ff.values[0] == Catch::Approx(mean).epsilon(1e-14));
    // unbiased sample variance of {1, e^-1, 1, e^-1}
    const double dev = 0.5 * (f_even - f_odd);
    const double var = 4.0 * dev * dev / 3.0;
    REQUIRE(ff.stderrs[0] == Catch::Approx(std::sqrt(var / 4.0)).epsilon(1e-12));
    REQUIRE(ff.n_samples == 4);
}

TEST_CASE("ensemble_dff reports the failing sample index") {
    auto builder = [](int sample) -> ComplexSpectrum {
        if (sample == 1) throw std::runtime_error("synthetic failure");
        ComplexSpectrum sp;
        sp.dim = 0;
        sp.values = {Complex(0, 0)};
        return sp;
    };
    REQUIRE_THROWS_WITH(ensemble_dff(builder, {1.0}, 3),
                        Catch::Matchers::ContainsSubstring("sample 1"));
}

// --------------------------- derived scalar quantities --------------------------

TEST_CASE("fidelity and autocorrelation maps") {
    REQUIRE(fidelity_from_dff(1.0, 7) == Catch::Approx(1.0));
    REQUIRE(fidelity_from_dff(0.0, 7) == Catch::Approx(1.0 / 8.0));
    // (1 + N F) / (N + 1)
    REQUIRE(fidelity_from_dff(0.5, 4) == Catch::Approx(3.0 / 5.0));
    REQUIRE_THROWS(fidelity_from_dff(1.5, 4));
    REQUIRE_THROWS(fidelity_from_dff(-0.2, 4));

    // (N^2 F - 1) / (N^2 - 1) * C0
    REQUIRE(autocorr_from_dff(1.0, 3, 2.5) == Catch::Approx(2.5));
    REQUIRE(autocorr_from_dff(1.0 / 9.0, 3, 2.5) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE_THROWS(autocorr_from_dff(0.5, 1, 1.0));
}

// -------------------------------- self-averaging --------------------------------

TEST_CASE("self_averaging_test returns per-dimension sample variances") {
    // Sample 0: all modes at zero (F = 1). Sample 1: all modes at -1, so
    // F(1) = e^{-1}. Unbiased variance over the two samples is
    // (1 - e^{-1})^2 / 2 at every dimension, exactly.
    auto builder = [](int n, int sample) {
        ComplexSpectrum sp;
        sp.dim = n;
        sp.values.assign(std::size_t(n) * n,
                         sample == 0 ? Complex(0, 0) : Complex(-1.0, 0));
        return sp;
    };
    const auto rows = self_averaging_test(builder, {2, 3}, 1.0, 2);
    REQUIRE(rows.size() == 2);
    const double dev = 1.0 - std::exp(-1.0);
    for (const auto& [n, var] : rows) {
        REQUIRE((n == 2 || n == 3));
        REQUIRE(var == Catch::Approx(dev * dev / 2.0).epsilon(1e-12));
    }
}

// ------------------------------- real similarity --------------------------------

TEST_CASE("eigenvalues_real_form reproduces the exact four-mode spectrum") {
    Matrix lowering = Matrix::Zero(2, 2);
    lowering(1, 0) = 1.0;
    const Superoperator s = lindbladian(Matrix::Zero(2, 2), {lowering}, {1.0});
    const ComplexSpectrum sp = eigenvalues_real_form(s);
    REQUIRE(sp.dim == 4);
    require_same_spectrum(sp.values,
                          {Complex(0, 0), Complex(-1, 0), Complex(-1, 0), Complex(-2, 0)}, 1e-12);
    REQUIRE(sp.trace_defect < 1e-12);
}

TEST_CASE("eigenvalues_real_form matches the complex eigensolve on a Lindbladian") {
    const int n = 7;
    const Matrix h = sample_gue({EnsembleKind::GUE, n, 1.0, subseed(91ull, 0)});
    const Matrix l = sample_ginibre({EnsembleKind::ComplexGinibre, n, 0.7, subseed(91ull, 1)});
    const Superoperator s = lindbladian(h, {l}, {0.3});
    const ComplexSpectrum a = eigenvalues(s);
    const ComplexSpectrum b = eigenvalues_real_form(s);
    REQUIRE(a.values.size() == b.values.size());
    REQUIRE(b.dim == n * n);
    double radius = 0.0;
    for (const Complex& z : a.values) radius = std::max(radius, std::abs(z));
    // Hausdorff-style multiset agreement; lexicographic pairing would break on
    // conjugate pairs whose real parts differ only by roundoff.
    for (const Complex& z : a.values) {
        double best = 1e300;
        for (const Complex& w : b.values) best = std::min(best, std::abs(w - z));
        REQUIRE(best < 1e-9 * radius);
    }
    for (const Complex& w : b.values) {
        double best = 1e300;
        for (const Complex& z : a.values) best = std::min(best, std::abs(w - z));
        REQUIRE(best < 1e-9 * radius);
    }
    REQUIRE(b.trace_defect < 1e-8 * radius);
}

TEST_CASE("eigenvalues_real_form handles the one-dimensional edge") {
    const Superoperator s = lindbladian(Matrix::Zero(1, 1), {Matrix::Identity(1, 1)}, {2.0});
    const ComplexSpectrum sp = eigenvalues_real_form(s);
    REQUIRE(sp.values.size() == 1);
    REQUIRE(std::abs(sp.values[0]) < 1e-14);
}
