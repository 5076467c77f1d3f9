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

// numerics.hpp: adaptive Gauss-Kronrod quadrature, Brent root finding, fits

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lindff {

// --------------------------- Gauss-Kronrod 7/15 ------------------------------

namespace detail {

// Kronrod abscissae on [-1, 1], positive half; even indices interleave the
// 7-point Gauss rule (odd indices of this table).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T>
double absval(const T& x) {
    return std::abs(x);
}

}  // namespace detail

template <class T>
struct QuadResult {
    T value{};
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

// One Kronrod panel over [a, b]; abs_error is the (conservative) |K15 - G7|.
template <class F, class T = decltype(std::declval<F&>()(0.0))>
QuadResult<T> gk15_panel(F&& f, double a, double b) {
    using detail::kGK15Nodes;
    using detail::kGK15WeightsG;
    using detail::kGK15WeightsK;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(mid);
    T sum_k = kGK15WeightsK[7] * fc;
    T sum_g = kGK15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const T lo = f(mid - half * kGK15Nodes[i]);
        const T hi = f(mid + half * kGK15Nodes[i]);
        sum_k += kGK15WeightsK[i] * (lo + hi);
        if (i % 2 == 1) sum_g += kGK15WeightsG[i / 2] * (lo + hi);
    }
    QuadResult<T> r;
    r.value = half * sum_k;
    r.abs_error = detail::absval(half * (sum_k - sum_g));
    r.evaluations = 15;
    return r;
}

// Globally adaptive integration: repeatedly split the worst panel until the
// summed error drops below max(abs_tol, rel_tol * |value|).
template <class F, class T = decltype(std::declval<F&>()(0.0))>
QuadResult<T> integrate(F&& f, double a, double b, double abs_tol = 1e-12,
                        double rel_tol = 1e-12, int max_panels = 4000) {
    struct Panel {
        double a, b, err;
        T val;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> queue;
    auto first = gk15_panel(f, a, b);
    queue.push({a, b, first.abs_error, first.value});
    T total = first.value;
    double total_err = first.abs_error;
    int evals = first.evaluations;
    int panels = 1;
    while (total_err > std::max(abs_tol, rel_tol * detail::absval(total)) && panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = gk15_panel(f, worst.a, mid);
        auto right = gk15_panel(f, mid, worst.b);
        total += left.value + right.value - worst.val;
        total_err += left.abs_error + right.abs_error - worst.err;
        queue.push({worst.a, mid, left.abs_error, left.value});
        queue.push({mid, worst.b, right.abs_error, right.value});
        evals += left.evaluations + right.evaluations;
        ++panels;
    }
    // Re-sum panels smallest-first to curb accumulation error in long runs.
    std::vector<Panel> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top());
        queue.pop();
    }
    std::sort(parts.begin(), parts.end(),
              [](const Panel& p, const Panel& q) { return detail::absval(p.val) < detail::absval(q.val); });
    T resum{};
    double err = 0.0;
    for (const auto& p : parts) {
        resum += p.val;
        err += p.err;
    }
    QuadResult<T> r;
    r.value = resum;
    r.abs_error = err;
    r.evaluations = evals;
    r.converged = err <= std::max(abs_tol, rel_tol * detail::absval(resum));
    return r;
}

// ------------------------------ root finding --------------------------------

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
template <class F>
double brent_root(F&& f, double a, double b, double xtol = 0.0, double rtol = 1e-14,
                  int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::invalid_argument("brent_root: interval does not bracket a sign change");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * rtol * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // Inverse quadratic interpolation, secant when a == c.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (fb == 0.0) return b;
    }
    return b;
}

// ------------------------------- least squares -------------------------------

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need matching x/y with at least two points");
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

// Running mean / variance accumulator (Welford).
class RunningStats {
public:
    void add(double x) {
        ++n_;
        const double d = x - mean_;
        mean_ += d / double(n_);
        m2_ += d * (x - mean_);
    }
    long long count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / double(n_ - 1) : 0.0; }
    double stderr_mean() const { return n_ > 1 ? std::sqrt(variance() / double(n_)) : 0.0; }

private:
    long long n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace lindff
