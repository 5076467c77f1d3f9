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

// moments.hpp: trace and matrix moments of generators, their Kronecker-factored
// fast paths, and the closed-form moment families they converge to

#pragma once

#include <Eigen/Eigenvalues>
#include <lindff/ensembles.hpp>
#include <lindff/numerics.hpp>
#include <lindff/specfun.hpp>
#include <lindff/superop.hpp>
#include <lindff/types.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lindff {

// ------------------------------- trace moments --------------------------------

// (1/N^2) tr S^n. The final trace of a product pairs the accumulated power with
// S elementwise, saving one full multiply.
inline Complex trace_moment(const Superoperator& s, int n) {
    if (n < 0) throw std::invalid_argument("trace_moment: order must be >= 0");
    const int d = s.dim * s.dim;
    if (n == 0) return Complex(1.0, 0.0);
    if (n == 1) return s.matrix.trace() / double(d);
    Matrix power = s.matrix;
    for (int k = 2; k < n; ++k) power = (power * s.matrix).eval();
    // tr(P S) = sum_{rc} P_{rc} S_{cr}
    const Complex tr = (power.transpose().cwiseProduct(s.matrix)).sum();
    return tr / double(d);
}

namespace detail {

// Single-jump dissipator as a sum of three Kronecker words:
// D = 2 (L kt L^dag) - (W kt 1) - (1 kt W), W = L^dag L. Products of such
// words stay Kronecker-factored, so tr D^n splits into 3^n pairs of N x N
// traces instead of one N^2 x N^2 power.
inline Complex dissipator_word_sum(const Matrix& l, int n, bool recycling_terms) {
    const int nn = int(l.rows());
    const Matrix id = Matrix::Identity(nn, nn);
    const Matrix w = l.adjoint() * l;
    struct Letter {
        Matrix p, q;
    };
    std::vector<Letter> alphabet;
    if (recycling_terms) alphabet.push_back({2.0 * l, l.adjoint()});
    alphabet.push_back({-w, id});
    alphabet.push_back({-id, w});
    Complex total(0.0, 0.0);
    // Depth-first over words; P accumulates left-to-right, Q right-to-left.
    std::function<void(int, const Matrix&, const Matrix&)> walk =
        [&](int depth, const Matrix& p, const Matrix& q) {
            if (depth == n) {
                total += p.trace() * q.trace();
                return;
            }
            for (const Letter& a : alphabet) walk(depth + 1, (p * a.p).eval(), (a.q * q).eval());
        };
    walk(0, id, id);
    return total;
}

}  // namespace detail

// (1/N^2) tr D_L^n through the Kronecker-word expansion; O(3^n N^3).
inline Complex dissipator_trace_moment(const Matrix& l, int n) {
    if (n < 0) throw std::invalid_argument("dissipator_trace_moment: order must be >= 0");
    const int nn = int(l.rows());
    if (n == 0) return Complex(1.0, 0.0);
    return detail::dissipator_word_sum(l, n, true) / double(nn * nn);
}

// --------------------------- non-crossing moments ------------------------------

// (-1)^n (1/N^2) sum_{ij} (u_i + u_j)^n over eigenvalues u of M = sum L^dag L:
// the trace moments of the generator with every recycling term dropped.
inline double noncrossing_moment(const std::vector<Matrix>& jumps, int n) {
    if (n < 0) throw std::invalid_argument("noncrossing_moment: order must be >= 0");
    if (jumps.empty()) throw std::invalid_argument("noncrossing_moment: need at least one jump");
    if (n == 0) return 1.0;
    const int nn = int(jumps[0].rows());
    Matrix m = Matrix::Zero(nn, nn);
    for (const Matrix& l : jumps) m += l.adjoint() * l;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("noncrossing_moment: eigensolve failed");
    const RealVector u = es.eigenvalues();
    // sum_{ij} (u_i + u_j)^n = sum_q C(n,q) S_q S_{n-q} with power sums S_q.
    std::vector<double> s(n + 1, 0.0);
    for (int q = 0; q <= n; ++q)
        for (int i = 0; i < nn; ++i) s[q] += std::pow(u(i), q);
    double total = 0.0;
    double binom = 1.0;
    for (int q = 0; q <= n; ++q) {
        total += binom * s[q] * s[n - q];
        binom = binom * (n - q) / (q + 1.0);
    }
    return ((n % 2 == 0) ? 1.0 : -1.0) * total / double(nn * nn);
}

// ------------------------ paired truncation comparison -------------------------

struct LemmaCheckRow {
    int dim = 0;
    int order = 0;
    double mean_diff = 0.0;   // mean of trace moment minus non-crossing moment
    double stderr_diff = 0.0; // paired over identical samples
    double mean_trace = 0.0;
    int n_samples = 0;
};

/// Paired estimate of <tr D^n - tr D_nc^n>/N^2 over Ginibre jumps: both moments
// come from the same sample, so the O(1) fluctuations cancel in the difference.
inline LemmaCheckRow lemma_check(const EnsembleSpec& jump_spec, int order, int n_samples) {
    validate(jump_spec);
    if (order < 1) throw std::invalid_argument("lemma_check: order must be >= 1");
    if (n_samples < 2) throw std::invalid_argument("lemma_check: need n_samples >= 2");
    const int nn = jump_spec.dim;
    RunningStats diff, trace;
    for (int s = 0; s < n_samples; ++s) {
        EnsembleSpec one = jump_spec;
        one.seed = subseed(jump_spec.seed, std::uint64_t(s));
        const Matrix l = sample_ginibre(one);
        const double full = (detail::dissipator_word_sum(l, order, true) / double(nn * nn)).real();
        const double trunc = (detail::dissipator_word_sum(l, order, false) / double(nn * nn)).real();
        diff.add(full - trunc);
        trace.add(full);
    }
    LemmaCheckRow row;
    row.dim = nn;
    row.order = order;
    row.mean_diff = diff.mean();
    row.stderr_diff = diff.stderr_mean();
    row.mean_trace = trace.mean();
    row.n_samples = n_samples;
    return row;
}

// --------------------------- matrix-moment structure ---------------------------

// Projects <(D^n)_{(ij),(kl)}> onto A d_ik d_jl + B d_ij d_kl + C d_il d_jk.
// The three structures are not orthogonal; their Gram matrix is
// [[N^2, N, N], [N, N^2, N], [N, N, N^2]] under the Frobenius inner product.
inline MatrixMomentDecomposition matrix_moment_decompose(const EnsembleSpec& jump_spec, int order,
                                                         int n_samples) {
    validate(jump_spec);
    if (order < 1) throw std::invalid_argument("matrix_moment_decompose: order must be >= 1");
    if (n_samples < 2) throw std::invalid_argument("matrix_moment_decompose: need n_samples >= 2");
    const int nn = jump_spec.dim;
    const double n2 = double(nn) * nn;
    Eigen::Matrix3d gram;
    gram << n2, nn, nn, nn, n2, nn, nn, nn, n2;
    const Eigen::Matrix3d gram_inv = gram.inverse();
    RunningStats sa, sb, sc;
    for (int s = 0; s < n_samples; ++s) {
        EnsembleSpec one = jump_spec;
        one.seed = subseed(jump_spec.seed, std::uint64_t(s));
        const Superoperator d = simple_dissipator(sample_ginibre(one));
        Matrix power = d.matrix;
        for (int k = 1; k < order; ++k) power = (power * d.matrix).eval();
        Complex p1(0.0, 0.0), p2(0.0, 0.0), p3(0.0, 0.0);
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j) {
                p1 += power(i * nn + j, i * nn + j);
                p2 += power(i * nn + i, j * nn + j);
                p3 += power(i * nn + j, j * nn + i);
            }
        const Eigen::Vector3d proj(p1.real(), p2.real(), p3.real());
        const Eigen::Vector3d abc = gram_inv * proj;
        sa.add(abc(0));
        sb.add(abc(1));
        sc.add(abc(2));
    }
    MatrixMomentDecomposition out;
    out.order = order;
    out.A = sa.mean();
    out.B = sb.mean();
    out.C = sc.mean();
    out.A_stderr = sa.stderr_mean();
    out.B_stderr = sb.stderr_mean();
    out.C_stderr = sc.stderr_mean();
    out.n_samples = n_samples;
    return out;
}

// ------------------------------ ensemble tables --------------------------------

// Monte Carlo trace moments over an ensemble of superoperators; builder maps a
// sample index to a Superoperator. Stores both the per-N^2 normalization and
// the per-(N^2 - 1) variant used when the exact zero mode is excluded.
template <typename Builder>
inline MomentTable ensemble_trace_moments(Builder&& builder, const std::vector<int>& orders,
                                          int n_samples) {
    if (n_samples < 1)
        throw std::invalid_argument("ensemble_trace_moments: need at least one sample");
    for (int n : orders)
        if (n < 0) throw std::invalid_argument("ensemble_trace_moments: orders must be >= 0");
    std::vector<RunningStats> re(orders.size()), im(orders.size());
    int dim_sq = 0;
    for (int s = 0; s < n_samples; ++s) {
        Superoperator sop;
        try {
            sop = builder(s);
        } catch (const std::exception& e) {
            throw std::runtime_error("ensemble_trace_moments: sample " + std::to_string(s) +
                                     ": " + e.what());
        }
        dim_sq = sop.dim * sop.dim;
        for (std::size_t k = 0; k < orders.size(); ++k) {
            const Complex mu = trace_moment(sop, orders[k]);
            re[k].add(mu.real());
            im[k].add(mu.imag());
        }
    }
    MomentTable table;
    table.orders = orders;
    table.n_samples = n_samples;
    table.per_trace_norm = true;
    const double nm1_scale = dim_sq > 1 ? double(dim_sq) / double(dim_sq - 1) : 1.0;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const Complex mean(re[k].mean(), im[k].mean());
        table.values.push_back(orders[k] == 0 ? Complex(1.0, 0.0) : mean);
        table.values_nm1.push_back(table.values.back() * nm1_scale);
        table.stderrs.push_back(orders[k] == 0
                                    ? 0.0
                                    : std::hypot(re[k].stderr_mean(), im[k].stderr_mean()));
    }
    return table;
}

// ----------------------------- closed-form families ----------------------------

namespace detail {

// Catalan numbers via C_k = C_{k-1} (4k-2)/(k+1). Every intermediate product
// is an integer below 2^53 through k = 28, so the doubles stay exact there
// and pick up only a few ulp beyond.
inline double catalan(int k) {
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * double(4 * j - 2) / double(j + 1);
    return c;
}

}  // namespace detail

/// <(1/N) tr (L^dag L)^n> at large N for Ginibre L: (2 (4v)^n / pi) B(n+1/2, 3/2),
/// which collapses to Catalan(n) v^n.
inline double wishart_moment(int n, double v) {
    if (n < 0) throw std::invalid_argument("wishart_moment: order must be >= 0");
    if (!(v > 0.0)) throw std::invalid_argument("wishart_moment: variance must be > 0");
    return detail::catalan(n) * std::pow(v, n);
}

/// Large-N moments of the hermitian-jump dissipator:
/// M_k = v^k 4^{2k+1} G(k+1/2) G(k+3/2) / (pi G(k+2) G(k+3))
///     = Catalan(k) Catalan(k+1) v^k.
inline double semicircle_dissipator_moment(int k, double v) {
    if (k < 0) throw std::invalid_argument("semicircle_dissipator_moment: order must be >= 0");
    if (!(v > 0.0)) throw std::invalid_argument("semicircle_dissipator_moment: variance must be > 0");
    return detail::catalan(k) * detail::catalan(k + 1) * std::pow(v, k);
}

}  // namespace lindff
