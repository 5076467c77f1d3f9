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

// analytic.hpp: closed-form large-N (and exact finite-N) form factors,
// spectral densities, resolvents, support curves, and gap curves, with
// quadrature fallbacks where only an integral representation exists

#pragma once

#include <lindff/numerics.hpp>
#include <lindff/specfun.hpp>
#include <lindff/specfun_mp.hpp>
#include <lindff/types.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lindff {

// --------------------------- single Ginibre jump ------------------------------

// F(t) = e^{-4vt} (I0(2vt) + I1(2vt))^2, evaluated with scaled Bessels
// e^{-x} I_n(x) so no factor overflows; decays like 1/(pi v t).
inline double dff_ginibre(double t, double v) {
    if (!(t >= 0.0)) throw std::invalid_argument("dff_ginibre: t must be >= 0");
    if (!(v > 0.0)) throw std::invalid_argument("dff_ginibre: v must be > 0");
    const double x = 2.0 * v * t;
    const double s = bessel_i_scaled(0, x) + bessel_i_scaled(1, x);
    return s * s;
}

// ------------------------- normal jump, exact finite N -------------------------

// Exact F(t) at finite N for a random normal jump operator (v = 1):
// F = 1/N + (E1^2 - E2)/t^2 with E1 = 1 - (1+t/N)^{-N} and
// E2 = 1 - (1+2t/N)^N (1+t/N)^{-2N}, both via expm1/log1p so the formula
// survives N as large as 1e8 and t down to 1e-9.
inline double dff_normal_exact(double t, long long n) {
    if (n < 1) throw std::invalid_argument("dff_normal_exact: N must be >= 1");
    if (!(t >= 0.0)) throw std::invalid_argument("dff_normal_exact: t must be >= 0");
    const double nn = double(n);
    if (t < 1e-9) return 1.0;  // removable singularity, series limit
    const double e1 = -std::expm1(-nn * std::log1p(t / nn));
    const double e2 = -std::expm1(nn * std::log1p(2.0 * t / nn) - 2.0 * nn * std::log1p(t / nn));
    return 1.0 / nn + (e1 * e1 - e2) / (t * t);
}

// ------------------------------ hermitian jump ---------------------------------

namespace detail {

inline double semicircle_density(double y, double v) {
    const double r = 4.0 * v - y * y;
    return r <= 0.0 ? 0.0 : std::sqrt(r) / (2.0 * M_PI * v);
}

// C(u) = Int rho_sc(y) rho_sc(y + u) dy, the autocorrelation of the
// semicircle; support |u| < 4 sqrt(v), C(0) = 8/(3 pi^2 sqrt(v)).
inline double semicircle_overlap(double u, double v) {
    const double a = 2.0 * std::sqrt(v);
    u = std::abs(u);
    if (u >= 2.0 * a) return 0.0;
    auto f = [u, v](double y) { return semicircle_density(y, v) * semicircle_density(y + u, v); };
    return integrate(f, -a, a - u, 1e-13, 1e-11).value;
}

inline double dff_gue_series(double t, double v) {
    return hyp_series({0.5, 1.5}, {2.0, 3.0}, -16.0 * v * t, 1e-7).value;
}

// F(t) = Int Int rho_sc(x) rho_sc(y) e^{-(x-y)^2 t} dx dy rewritten in the
// difference coordinate and scaled by sqrt(t), so the large-t mass near
// x = y stays resolved: F = (2/sqrt(t)) Int_0 e^{-s^2} C(s/sqrt(t)) ds.
inline double dff_gue_quadrature(double t, double v) {
    const double rt = std::sqrt(t);
    const double smax = std::min(4.0 * std::sqrt(v) * rt, 8.5);
    auto f = [rt, v](double s) { return std::exp(-s * s) * semicircle_overlap(s / rt, v); };
    return 2.0 / rt * integrate(f, 0.0, smax, 1e-300, 1e-9).value;
}

}  // namespace detail

// 2F2(1/2, 3/2; 2, 3; -16vt): series while the alternating sum still carries
// full precision, quadrature over two semicircle laws beyond; the split point
// keeps the two methods within 1e-7 of each other on the overlap.
inline double dff_gue_dissipator(double t, double v) {
    if (!(t >= 0.0)) throw std::invalid_argument("dff_gue_dissipator: t must be >= 0");
    if (!(v > 0.0)) throw std::invalid_argument("dff_gue_dissipator: v must be > 0");
    if (t == 0.0) return 1.0;
    return (16.0 * v * t <= 30.0) ? detail::dff_gue_series(t, v) : detail::dff_gue_quadrature(t, v);
}

// Large-N resolvent of the hermitian-jump dissipator spectrum:
// G(z) = -(1/2v)(1 - 2F1(-1/2, 1/2; 2; -16v/z)); cut on z in [-16v, 0).
// Written through 2F1 - 1 so the 1/z tail survives at large |z|.
inline Complex gue_dissipator_resolvent(Complex z, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("gue_dissipator_resolvent: v must be > 0");
    if (std::abs(z) == 0.0)
        throw std::domain_error("gue_dissipator_resolvent: z = 0 sits on the spectrum edge");
    return hyp2f1_half_m1(-16.0 * v / z) / (2.0 * v);
}

// Large-N resolvent of the rotated LvN spectrum (eigenvalue differences of a
// GUE matrix): G(z) = (z/2v)(1 - 2F1(-1/2, 1/2; 2; 16v/z^2)); cut on the real
// segment [-4 sqrt(v), 4 sqrt(v)] minus the origin. Written through 2F1 - 1
// so the 1/z tail survives at large |z|.
inline Complex lvn_resolvent(Complex z, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("lvn_resolvent: v must be > 0");
    if (std::abs(z) == 0.0) throw std::domain_error("lvn_resolvent: z = 0 is inside the support");
    return -z / (2.0 * v) * hyp2f1_half_m1(16.0 * v / (z * z));
}

namespace detail {

// 1F2(3/2; 2, 3; -4vt^2), in extended precision once the alternating series
// starts cancelling (peak term grows like e^{4 sqrt(v) t}).
inline double lvn_sff_hyp(double t, double v) {
    const double x = -4.0 * v * t * t;
    if (std::abs(x) <= 1.0) return hyp_series({1.5}, {2.0, 3.0}, x, 1e-12).value;
    return hyp_series_mp({1.5}, {2.0, 3.0}, x);
}

}  // namespace detail

// Spectral form factor of LvN evolution under a GUE Hamiltonian:
// (J1(2 sqrt(v) t)/(sqrt(v) t))^2, identically 1F2(3/2; 2, 3; -4vt^2).
inline double lvn_sff(double t, double v) {
    if (!(t >= 0.0)) throw std::invalid_argument("lvn_sff: t must be >= 0");
    if (!(v > 0.0)) throw std::invalid_argument("lvn_sff: v must be > 0");
    const double s = std::sqrt(v) * t;
    if (s < 1e-8) return 1.0;  // J1(2s)/s -> 1
    const double r = bessel_j1(2.0 * s) / s;
    return r * r;
}

// --------------------------- Wishart / multi-jump ------------------------------

// Marchenko-Pastur density of L^dag L at square aspect ratio:
// (1/2 pi v) sqrt(4v/x - 1) on (0, 4v], zero elsewhere.
inline double mp_density(double x, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("mp_density: v must be > 0");
    if (x <= 0.0 || x > 4.0 * v) return 0.0;
    return std::sqrt(4.0 * v / x - 1.0) / (2.0 * M_PI * v);
}

// G(z) = 1/(2v) - sqrt(z - 4v) sqrt(z) / (2vz). The product of principal
// square roots is continuous across the negative axis, so the only cut is the
// support [0, 4v], and G ~ 1/z at infinity.
inline Complex mp_resolvent(Complex z, double v) {
    if (!(v > 0.0)) throw std::invalid_argument("mp_resolvent: v must be > 0");
    if (std::abs(z) == 0.0) throw std::domain_error("mp_resolvent: z = 0 is a support edge");
    return 1.0 / (2.0 * v) - std::sqrt(z - 4.0 * v) * std::sqrt(z) / (2.0 * v * z);
}

// Resolvent of M = sum_a L_a^dag L_a for m identical variances:
// G = (z - v(m-1) - sqrt(z - v xi_+) sqrt(z - v xi_-)) / (2vz),
// xi_pm = (1 pm sqrt(m))^2; reduces to mp_resolvent at m = 1. Rationalized to
// G = 2 / (z - v(m-1) + root), which adds the two large-|z| terms instead of
// cancelling them.
inline Complex multi_jump_resolvent(Complex z, int m, double v) {
    if (m < 1) throw std::invalid_argument("multi_jump_resolvent: m must be >= 1");
    if (!(v > 0.0)) throw std::invalid_argument("multi_jump_resolvent: v must be > 0");
    if (std::abs(z) == 0.0) throw std::domain_error("multi_jump_resolvent: z = 0 is a pole");
    const double sm = std::sqrt(double(m));
    const double lo = (1.0 - sm) * (1.0 - sm), hi = (1.0 + sm) * (1.0 + sm);
    const Complex root = std::sqrt(z - v * hi) * std::sqrt(z - v * lo);
    return 2.0 / (z - v * double(m - 1) + root);
}

// Free-additive resolvent of M = sum_a L_a^dag L_a with arbitrary variances:
// the solution of G = 1/(z - sum_a v_a/(1 - v_a G)) on the branch G ~ 1/z,
// tracked by Newton continuation along the ray from |z| ~ 1e3 inward.
inline Complex sum_wishart_resolvent(Complex z, const std::vector<double>& variances) {
    if (variances.empty())
        throw std::invalid_argument("sum_wishart_resolvent: need at least one variance");
    double vsum = 0.0;
    for (double v : variances) {
        if (!(v > 0.0)) throw std::invalid_argument("sum_wishart_resolvent: variances must be > 0");
        vsum += v;
    }
    if (std::abs(z) < 1e-12)
        throw std::domain_error("sum_wishart_resolvent: z too close to the origin");

    auto newton = [&](Complex zk, Complex g) -> Complex {
        for (int it = 0; it < 80; ++it) {
            Complex s(0.0, 0.0), sp(0.0, 0.0);
            for (double v : variances) {
                const Complex d = 1.0 - v * g;
                if (std::abs(d) < 1e-12)
                    throw std::runtime_error(
                        "sum_wishart_resolvent: root collided with the self-energy pole at G = " +
                        std::to_string(g.real()) + "+" + std::to_string(g.imag()) + "i");
                s += v / d;
                sp += v * v / (d * d);
            }
            const Complex h = zk - s - 1.0 / g;
            const Complex hp = -sp + 1.0 / (g * g);
            if (std::abs(hp) < 1e-14)
                throw std::runtime_error(
                    "sum_wishart_resolvent: branch ambiguity (vanishing derivative), colliding roots "
                    "near G = " +
                    std::to_string(g.real()) + "+" + std::to_string(g.imag()) + "i");
            const Complex step = h / hp;
            g -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(g))) return g;
        }
        throw std::runtime_error("sum_wishart_resolvent: Newton continuation failed to converge");
    };

    const double radius = std::max({1e3, 1e3 * vsum, 4.0 * std::abs(z)});
    const Complex dir = z / std::abs(z);
    const int steps = 60;
    const double ratio = std::pow(std::abs(z) / radius, 1.0 / steps);
    double r = radius;
    Complex g = 1.0 / (dir * radius);
    for (int k = 0; k < steps; ++k) {
        r *= ratio;
        g = newton(dir * r, g);
    }
    return newton(z, g);
}

// Density of M/v for m identical unit-variance channels, in the dimensionless
// variable xi = x/v: (1/2 pi xi) sqrt((xi_+ - xi)(xi - xi_-)); unit mass.
inline double multi_jump_density(double xi, double m) {
    if (!(m >= 1.0)) throw std::invalid_argument("multi_jump_density: m must be >= 1");
    const double sm = std::sqrt(m);
    const double lo = (1.0 - sm) * (1.0 - sm), hi = (1.0 + sm) * (1.0 + sm);
    if (xi <= lo || xi >= hi) return 0.0;
    return std::sqrt((hi - xi) * (xi - lo)) / (2.0 * M_PI * xi);
}

// F(t) = e^{-2 v xi_- t} (Int_0^{4 sqrt(m)} du sqrt((4 sqrt(m) - u) u)
//        e^{-vtu} / (2 pi (u + xi_-)))^2, evaluated after u = w^2 so the
// integrand is smooth at the decaying edge for every t.
inline double dff_multi_jump(double t, int m, double v) {
    if (m < 1) throw std::invalid_argument("dff_multi_jump: m must be >= 1");
    if (!(v > 0.0)) throw std::invalid_argument("dff_multi_jump: v must be > 0");
    if (!(t >= 0.0)) throw std::invalid_argument("dff_multi_jump: t must be >= 0");
    if (t == 0.0) return 1.0;
    const double sm = std::sqrt(double(m));
    const double lo = (1.0 - sm) * (1.0 - sm);
    const double span = 4.0 * sm;
    auto f = [&](double w) {
        const double u = w * w;
        return w * w * std::sqrt(span - u) * std::exp(-v * t * u) / (M_PI * (u + lo));
    };
    const double j = integrate(f, 0.0, std::sqrt(span), 1e-300, 1e-10).value;
    return std::exp(-2.0 * v * lo * t) * j * j;
}

// C t^{-3} e^{-2 v xi_- t} with C = sqrt(m)/(4 pi v^3 xi_-^2); undefined at
// m = 1 where xi_- = 0 and the decay is the algebraic single-jump law.
inline double dff_multi_jump_asymptote(double t, int m, double v) {
    if (m < 2)
        throw std::invalid_argument(
            "dff_multi_jump_asymptote: m must be >= 2 (constant diverges as xi_- -> 0)");
    if (!(v > 0.0)) throw std::invalid_argument("dff_multi_jump_asymptote: v must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("dff_multi_jump_asymptote: t must be > 0");
    const double sm = std::sqrt(double(m));
    const double lo = (1.0 - sm) * (1.0 - sm);
    const double c = sm / (4.0 * M_PI * v * v * v * lo * lo);
    return c * std::exp(-2.0 * v * lo * t) / (t * t * t);
}

// --------------------- non-hermitian Hamiltonian support -----------------------

namespace detail {

// Support boundary of the rotated spectrum of H - i gamma sum_a L_a^dag L_a:
// y^2(x) = 4m/(gamma x) - [m/x - gamma/(1 + gamma x) + 1/gamma]^2.
inline double nh_ysq(double x, double gamma, int m) {
    const double bracket = double(m) / x - gamma / (1.0 + gamma * x) + 1.0 / gamma;
    return 4.0 * double(m) / (gamma * x) - bracket * bracket;
}

struct NhEdges {
    double x_min = 0.0;
    double x_max = 0.0;
    std::string diagnostic;
};

// Brackets the support [x_min, x_max] from an interior point found near the
// known small-/large-coupling anchors, then polishes both edges with Brent.
inline NhEdges nh_edges(double gamma, int m) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("nh_edges: gamma must be positive and finite");
    if (m < 1) throw std::invalid_argument("nh_edges: m must be >= 1");
    auto f = [gamma, m](double x) { return nh_ysq(x, gamma, m); };

    std::vector<std::pair<double, std::string>> anchors;
    anchors.emplace_back(double(m) * gamma, "anchor m*gamma");
    if (m > 1) {
        const double sm = std::sqrt(double(m));
        anchors.emplace_back(gamma * (sm - 1.0) * (sm - 1.0), "anchor gamma*(sqrt(m)-1)^2");
    } else {
        anchors.emplace_back(std::cbrt(1.0 / (4.0 * gamma)), "anchor (4*gamma)^(-1/3)");
    }
    anchors.emplace_back(std::sqrt(anchors[0].first * anchors[1].first), "anchor geometric mean");

    double inside = 0.0;
    std::string diag;
    const double factors[] = {1.0, 1.25, 0.8, 1.6, 0.625, 2.0, 0.5, 3.2, 0.3125, 4.0, 0.25};
    for (const auto& [c, label] : anchors) {
        if (!(c > 0.0) || !std::isfinite(c)) continue;
        for (double fac : factors) {
            const double x = c * fac;
            if (f(x) > 0.0) {
                inside = x;
                diag = label + " x " + std::to_string(fac);
                break;
            }
        }
        if (inside > 0.0) break;
    }
    if (inside == 0.0) {
        // Geometric sweep as a last resort before reporting failure.
        const double lo = 1e-12, hi = 1e12;
        const int npts = 6000;
        for (int k = 0; k <= npts && inside == 0.0; ++k) {
            const double x = lo * std::pow(hi / lo, double(k) / npts);
            if (f(x) > 0.0) {
                inside = x;
                diag = "geometric sweep";
            }
        }
        if (inside == 0.0)
            throw std::runtime_error("nh_edges: no interior point of the support found in [1e-12, 1e12]");
    }

    double lo = inside;
    for (int k = 0; f(lo) > 0.0; ++k) {
        if (k > 2000) throw std::runtime_error("nh_edges: lower bracketing failed below " +
                                               std::to_string(lo));
        lo *= 0.5;
    }
    double hi = inside;
    for (int k = 0; f(hi) > 0.0; ++k) {
        if (k > 2000) throw std::runtime_error("nh_edges: upper bracketing failed above " +
                                               std::to_string(hi));
        hi *= 2.0;
    }
    NhEdges e;
    // The halving/doubling loops ran at least once, so f(2 lo) > 0 >= f(lo)
    // and f(hi/2) > 0 >= f(hi): both pairs bracket an edge.
    e.x_min = brent_root(f, lo, 2.0 * lo);
    e.x_max = brent_root(f, 0.5 * hi, hi);
    e.diagnostic = diag;
    return e;
}

}  // namespace detail

// y^2 on the support boundary curve; negative values mean x is outside.
inline double nh_support(double x, double gamma) {
    if (!(x > 0.0)) throw std::invalid_argument("nh_support: x must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("nh_support: gamma must be > 0");
    return detail::nh_ysq(x, gamma, 1);
}

// Planar eigenvalue density inside the support curve, independent of y:
// rho(x) = (1/4 pi) [1/x^2 - gamma^2/(1 + gamma x)^2 + 1].
inline double nh_density(double x, double gamma) {
    if (!(x > 0.0)) throw std::invalid_argument("nh_density: x must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("nh_density: gamma must be > 0");
    const double a = 1.0 / x;
    const double b = gamma / (1.0 + gamma * x);
    return (a * a - b * b + 1.0) / (4.0 * M_PI);
}

inline double multi_channel_nh_gap(double gamma, int m, std::string* diagnostic = nullptr) {
    const auto e = detail::nh_edges(gamma, m);
    if (diagnostic) *diagnostic = e.diagnostic;
    return e.x_min;
}

inline double nh_gap(double gamma) { return multi_channel_nh_gap(gamma, 1); }

inline std::pair<double, double> nh_support_edges(double gamma) {
    const auto e = detail::nh_edges(gamma, 1);
    return {e.x_min, e.x_max};
}

inline GapCurve gap_curve(const std::vector<double>& gammas, int m = 1) {
    GapCurve curve;
    curve.gammas = gammas;
    curve.x_min.reserve(gammas.size());
    curve.diagnostics.reserve(gammas.size());
    for (double g : gammas) {
        std::string diag;
        curve.x_min.push_back(multi_channel_nh_gap(g, m, &diag));
        curve.diagnostics.push_back(diag);
    }
    return curve;
}

// ------------------------- simple Lindbladian envelope -------------------------

// M(t) = (2/t) Int_{x_min}^{x_max} rho(x) e^{-xt} sin(y(x) t) dx; real by
// construction, squares to the leading-order form factor.
inline double simple_lindbladian_mgf(double t, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("simple_lindbladian_mgf: gamma must be positive and finite");
    if (t == 0.0)
        throw std::invalid_argument("simple_lindbladian_mgf: t = 0 undefined in the (2/t) form");
    if (!(t > 0.0)) throw std::invalid_argument("simple_lindbladian_mgf: t must be > 0");
    const auto [xmin, xmax] = nh_support_edges(gamma);
    auto f = [&](double x) {
        const double ysq = detail::nh_ysq(x, gamma, 1);
        const double y = ysq > 0.0 ? std::sqrt(ysq) : 0.0;
        return nh_density(x, gamma) * std::exp(-x * t) * std::sin(y * t);
    };
    const double floor_scale = 1e-13 * std::exp(-xmin * t);
    return 2.0 / t * integrate(f, xmin, xmax, floor_scale, 1e-10).value;
}

inline double dff_simple_lindbladian(double t, double gamma) {
    if (t == 0.0) return 1.0;
    const double m = simple_lindbladian_mgf(t, gamma);
    return m * m;
}

// ((2/t)(1/4 pi)(I_{x_max} - I_{x_min}))^2 with the antiderivative
// I_b(t) = -e^{-bt}[1/t + 1/b - 1/(1/gamma + b)]
//          - t e^{-bt}[eis(bt) - eis((1/gamma + b)t)],
// eis(u) = e^u Ei(-u); everything scaled so nothing overflows. A true bound
// for dff_simple_lindbladian since |sin| <= 1 under the integral.
inline double dff_upper_bound(double t, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("dff_upper_bound: gamma must be positive and finite");
    if (!(t > 0.0)) throw std::invalid_argument("dff_upper_bound: t must be > 0");
    const auto [xmin, xmax] = nh_support_edges(gamma);
    const double c = 1.0 / gamma;
    auto ib = [&](double b) {
        const double eb = std::exp(-b * t);
        const double eis_b = expint_ei_scaled(-b * t);
        const double eis_c = expint_ei_scaled(-(c + b) * t);
        return -eb * (1.0 / t + 1.0 / b - 1.0 / (c + b)) - t * eb * (eis_b - eis_c);
    };
    const double integral = (ib(xmax) - ib(xmin)) / (4.0 * M_PI);
    const double m = 2.0 / t * integral;
    return m * m;
}

// Leading-order tail published for the bound: (1/4 pi^2) t^{-4} e^{-2 delta t}.
// Uses only Ei(-u) -> -e^{-u}/u, which drops the same-order density factor
// (4 pi rho(x_min))^2 that dff_upper_bound keeps; envelope shape, not a bound.
inline double dff_upper_bound_tail(double t, double gamma) {
    if (!(t > 0.0)) throw std::invalid_argument("dff_upper_bound_tail: t must be > 0");
    const double delta = nh_gap(gamma);
    return std::exp(-2.0 * delta * t) / (4.0 * M_PI * M_PI * t * t * t * t);
}

}  // namespace lindff
