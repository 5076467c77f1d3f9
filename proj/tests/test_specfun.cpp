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

#include <lindff/numerics.hpp>
#include <lindff/specfun.hpp>
#include <lindff/specfun_mp.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace lindff;

// ------------------------------ scaled Bessel I --------------------------------

TEST_CASE("bessel_i_scaled at the origin") {
    REQUIRE(bessel_i_scaled(0, 0.0) == 1.0);
    REQUIRE(bessel_i_scaled(1, 0.0) == 0.0);
    REQUIRE_THROWS(bessel_i_scaled(2, 1.0));
    REQUIRE_THROWS(bessel_i_scaled(0, -1.0));
}

TEST_CASE("bessel_i_scaled matches its integral representation") {
    // e^{-x} I_n(x) = (1/pi) Int_0^pi e^{x(cos th - 1)} cos(n th) dth
    for (int n : {0, 1}) {
        for (double x : {0.05, 0.5, 2.0, 7.5, 14.0, 15.5, 40.0, 120.0, 380.0, 650.0}) {
            auto f = [x, n](double th) {
                return std::exp(x * (std::cos(th) - 1.0)) * std::cos(n * th);
            };
            const double oracle = integrate(f, 0.0, M_PI, 1e-15, 1e-14).value / M_PI;
            REQUIRE(std::abs(bessel_i_scaled(n, x) - oracle) < 1e-12);
        }
    }
}

TEST_CASE("bessel_i_scaled stays finite far into the asymptotic regime") {
    for (double x : {1e3, 1e4, 1e5, 1e6}) {
        const double v0 = bessel_i_scaled(0, x);
        const double v1 = bessel_i_scaled(1, x);
        REQUIRE(std::isfinite(v0));
        REQUIRE(std::isfinite(v1));
        // both approach 1/sqrt(2 pi x)
        const double lead = 1.0 / std::sqrt(2.0 * M_PI * x);
        REQUIRE(std::abs(v0 / lead - 1.0) < 1e-3);
        REQUIRE(std::abs(v1 / lead - 1.0) < 1e-3);
    }
}

// --------------------------------- Bessel J1 -----------------------------------

TEST_CASE("bessel_j1 matches its integral representation") {
    for (double x : {0.1, 0.7, 1.9, 3.0, 3.8317, 5.5, 9.0, 13.0, 20.0, 33.0, 47.0, 80.0}) {
        auto f = [x](double th) { return std::cos(th - x * std::sin(th)); };
        const double oracle = integrate(f, 0.0, M_PI, 1e-15, 1e-14).value / M_PI;
        REQUIRE(std::abs(bessel_j1(x) - oracle) < 1e-12);
        REQUIRE(bessel_j1(-x) == -bessel_j1(x));
    }
}

// -------------------------- generalized hypergeometric -------------------------

TEST_CASE("hyp_series is exactly one at the origin") {
    REQUIRE(hyp_series({0.5, 1.5}, {2.0, 3.0}, 0.0).value == 1.0);
    REQUIRE(hyp_series({}, {}, 0.0).value == 1.0);
}

TEST_CASE("hyp_series reproduces 1F1(1;2;x) = (e^x - 1)/x") {
    for (double x : {-5.0, -0.5, 0.5, 5.0, 20.0}) {
        const auto rep = hyp_series({1.0}, {2.0}, x, 1e-12);
        const double exact = std::expm1(x) / x;
        REQUIRE(std::abs(rep.value - exact) < 1e-12 * std::abs(exact));
        REQUIRE(rep.est_error <= 1e-12);
        REQUIRE(rep.terms_used > 1);
    }
    // x = -20 cancels ~4e7 of the leading terms; the error report must say so.
    const auto rep = hyp_series({1.0}, {2.0}, -20.0, 1e-7);
    REQUIRE(std::abs(rep.value - std::expm1(-20.0) / -20.0) < 1e-7 * std::expm1(-20.0) / -20.0);
    REQUIRE(rep.est_error > 1e-12);
    REQUIRE_THROWS_AS(hyp_series({1.0}, {2.0}, -20.0, 1e-12), std::runtime_error);
}

TEST_CASE("2F1(-1/2,1/2;2;1/2) direct series matches the Pfaff-transformed sum") {
    const double direct = hyp_series({-0.5, 0.5}, {2.0}, 0.5, 1e-13).value;
    // Pfaff: (1-x)^{1/2} 2F1(-1/2, 3/2; 2; x/(x-1)); at x = 1/2 the transformed
    // argument is -1, an alternating k^{-2} series; averaging adjacent partial
    // sums removes the truncation tail.
    double term = 1.0, sum = 1.0, prev_sum = 1.0;
    for (int k = 0; k < 3000000; ++k) {
        term *= (-0.5 + k) * (1.5 + k) / ((2.0 + k) * (k + 1.0)) * (-1.0);
        prev_sum = sum;
        sum += term;
    }
    const double pfaff = std::sqrt(0.5) * 0.5 * (sum + prev_sum);
    REQUIRE(std::abs(direct - pfaff) < 1e-12);
}

TEST_CASE("1F2(3/2;2,3;-4t^2) matches the squared Bessel form at t = 2") {
    const double t = 2.0;
    const auto rep = hyp_series({1.5}, {2.0, 3.0}, -4.0 * t * t, 1e-9);
    const double bessel = std::pow(bessel_j1(2.0 * t) / t, 2.0);
    REQUIRE(std::abs(rep.value - bessel) < 1e-9);
}

TEST_CASE("hyp_series rejects a divergent argument") {
    REQUIRE_THROWS_AS(hyp_series({0.5, 1.5}, {2.0}, 1.5), std::runtime_error);
}

TEST_CASE("hyp_series_mp agrees with the double path where both converge") {
    for (double x : {-0.8, -4.0, -16.0}) {
        const double mp = hyp_series_mp({1.5}, {2.0, 3.0}, x);
        const double dp = hyp_series({1.5}, {2.0, 3.0}, x, 1e-7).value;
        REQUIRE(std::abs(mp - dp) < 1e-9 * std::max(1.0, std::abs(mp)));
    }
}

TEST_CASE("hyp_series_mp survives catastrophic cancellation") {
    // x = -400 wipes out ~40 digits in double; compare against the Bessel form.
    const double t = 10.0;
    const double mp = hyp_series_mp({1.5}, {2.0, 3.0}, -4.0 * t * t);
    const double bessel = std::pow(bessel_j1(2.0 * t) / t, 2.0);
    REQUIRE(std::abs(mp - bessel) < 1e-12);
}

// ------------------------------ Gauss 2F1 special ------------------------------

TEST_CASE("hyp2f1_half matches a quadrature oracle across all three branches") {
    // (4/pi) Int_0^{pi/2} cos^2 th sqrt(1 - u sin^2 th) dth, real u < 1
    for (double u : {-40.0, -5.0, -1.2, -0.5, 0.3, 0.8, 0.84, 0.86, 0.95, 0.999}) {
        auto f = [u](double th) {
            const double s = std::sin(th);
            return std::cos(th) * std::cos(th) * std::sqrt(1.0 - u * s * s);
        };
        const double oracle = 4.0 / M_PI * integrate(f, 0.0, M_PI / 2.0, 1e-15, 1e-14).value;
        const Complex got = hyp2f1_half(Complex(u, 0.0));
        REQUIRE(std::abs(got.imag()) < 1e-12);
        REQUIRE(std::abs(got.real() - oracle) < 1e-10 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("hyp2f1_half off the real axis agrees with the direct series") {
    // |u| = 0.943 routes through Pfaff; the plain series still converges there.
    const Complex u(0.5, 0.8);
    Complex term = 1.0, sum = 1.0;
    for (int k = 0; k < 4000; ++k) {
        term *= (-0.5 + k) * (0.5 + k) / ((2.0 + k) * (k + 1.0)) * u;
        sum += term;
    }
    const Complex got = hyp2f1_half(u);
    REQUIRE(std::abs(got - sum) < 1e-12);
}

TEST_CASE("hyp2f1_half rejects the branch cut") {
    REQUIRE_THROWS_AS(hyp2f1_half(Complex(1.0, 0.0)), std::domain_error);
    REQUIRE_THROWS_AS(hyp2f1_half(Complex(2.5, 0.0)), std::domain_error);
}

// ----------------------------- exponential integral ----------------------------

TEST_CASE("expint_ei at -1 matches the quadrature value") {
    auto f = [](double y) { return std::exp(-y) / y; };
    const double oracle = -integrate(f, 1.0, 60.0, 1e-16, 1e-14).value;
    REQUIRE(std::abs(expint_ei(-1.0) - (-0.2193839)) < 1e-6);
    REQUIRE(std::abs(expint_ei(-1.0) - oracle) < 1e-13);
}

TEST_CASE("expint_ei follows the leading asymptote") {
    const double x = 100.0;
    REQUIRE(std::abs(-x * std::exp(x) * expint_ei(-x) - 1.0) < 0.02);
}

TEST_CASE("expint_ei matches quadrature over twenty points spanning the branch") {
    for (int k = 0; k < 20; ++k) {
        const double x = 0.15 + 1.9 * k;  // crosses the series/fraction split
        auto f = [](double y) { return std::exp(-y) / y; };
        const double oracle = -integrate(f, x, x + 55.0, 1e-20, 1e-14).value;
        REQUIRE(std::abs(expint_ei(-x) - oracle) < 1e-12 * std::abs(oracle));
    }
    REQUIRE_THROWS(expint_ei(0.0));
    REQUIRE_THROWS(expint_ei(0.5));
}

TEST_CASE("expint_ei_scaled carries the exponential factor exactly") {
    for (double x : {-0.3, -2.0, -10.0, -25.0, -80.0, -300.0}) {
        const double scaled = expint_ei_scaled(x);
        REQUIRE(std::isfinite(scaled));
        if (x > -30.0)
            REQUIRE(std::abs(scaled - std::exp(-x) * expint_ei(x)) <
                    1e-12 * std::abs(scaled));
        // asymptote e^{-x} Ei(x) ~ 1/x
        if (x <= -30.0) REQUIRE(std::abs(scaled * x - 1.0) < 0.05);
    }
}

// --------------------------- incomplete gamma ratio -----------------------------

TEST_CASE("gamma_incomplete_regularized boundary values") {
    REQUIRE(gamma_incomplete_regularized(3.5, 0.0) == 1.0);
    REQUIRE(gamma_incomplete_regularized(2.0, 500.0) < 1e-100);
    REQUIRE_THROWS(gamma_incomplete_regularized(0.0, 1.0));
    REQUIRE_THROWS(gamma_incomplete_regularized(1.0, -1.0));
}

TEST_CASE("gamma_incomplete_regularized matches the finite sum at N = 64, x = 64") {
    // For integer N: Q(N, x) = e^{-x} sum_{q<N} x^q / q!
    const int n = 64;
    const double x = 64.0;
    double sum = 0.0;
    for (int q = 0; q < n; ++q)
        sum += std::exp(-x + q * std::log(x) - std::lgamma(double(q + 1)));
    REQUIRE(std::abs(gamma_incomplete_regularized(double(n), x) - sum) < 1e-10);
}

TEST_CASE("gamma_incomplete_regularized finite-sum oracle over twenty points") {
    for (int k = 0; k < 20; ++k) {
        const int n = 1 + 4 * k;
        for (double x : {0.3 * n, 1.0 * n, 2.1 * n}) {
            double sum = 0.0;
            for (int q = 0; q < n; ++q)
                sum += std::exp(-x + q * std::log(x) - std::lgamma(double(q + 1)));
            REQUIRE(std::abs(gamma_incomplete_regularized(double(n), x) - sum) < 1e-10);
        }
    }
}

// ----------------------------------- log gamma ----------------------------------

TEST_CASE("log_gamma agrees with the standard library") {
    for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 8.0, 21.5, 64.0, 120.25, 500.0, 1e4}) {
        REQUIRE(std::abs(log_gamma(x) - std::lgamma(x)) <
                1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
    }
}
