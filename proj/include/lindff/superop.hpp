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

// superop.hpp: N^2 x N^2 generator construction under row-major vectorization,
// structural checks, steady states, and the LSOP binary format

#pragma once

#include <Eigen/Eigenvalues>
#include <lindff/types.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lindff {

// --------------------------- vectorization helpers ---------------------------

// Row-major flattening: rho_{ij} at index i*N + j.
inline Vector vec(const Matrix& rho) {
    const int n = int(rho.rows());
    Vector out(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i * n + j) = rho(i, j);
    return out;
}

inline Matrix unvec(const Vector& v, int n) {
    if (v.size() != Eigen::Index(n) * n) throw std::invalid_argument("unvec: size mismatch");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = v(i * n + j);
    return out;
}

// A kron B^T in the row-major convention: kron_t(A, B) vec(rho) = vec(A rho B).
inline Matrix kron_t(const Matrix& a, const Matrix& b) {
    const int n = int(a.rows());
    Matrix out = Matrix::Zero(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int col = k * n + l;
            for (int i = 0; i < n; ++i) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0, 0.0)) continue;
                for (int j = 0; j < n; ++j) out(i * n + j, col) += aik * b(l, j);
            }
        }
    return out;
}

namespace detail {

// out += alpha * kron_t(A, B) without a temporary N^2 x N^2.
inline void add_kron_t(Matrix& out, Complex alpha, const Matrix& a, const Matrix& b) {
    const int n = int(a.rows());
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int col = k * n + l;
            for (int i = 0; i < n; ++i) {
                const Complex f = alpha * a(i, k);
                if (f == Complex(0.0, 0.0)) continue;
                Complex* column = out.col(col).data() + i * n;
                for (int j = 0; j < n; ++j) column[j] += f * b(l, j);
            }
        }
}

inline void require_hermitian(const Matrix& h, const char* who) {
    const double scale = h.cwiseAbs().maxCoeff();
    if (scale == 0.0) return;
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-10 * scale)
        throw std::invalid_argument(std::string(who) + ": input is not hermitian within tolerance");
}

}  // namespace detail

// ------------------------------ constructors ---------------------------------

// -i (H kron 1 - 1 kron H^T): vec(-i [H, rho]); spectrum purely imaginary.
inline Superoperator lvn_generator(const Matrix& h) {
    detail::require_hermitian(h, "lvn_generator");
    const int n = int(h.rows());
    const Matrix id = Matrix::Identity(n, n);
    Superoperator s;
    s.dim = n;
    s.kind = SuperopKind::LvN;
    s.matrix = Matrix::Zero(n * n, n * n);
    detail::add_kron_t(s.matrix, Complex(0.0, -1.0), h, id);
    detail::add_kron_t(s.matrix, Complex(0.0, +1.0), id, h);
    return s;
}

// 2 L kron_t L^dag - L^dag L kron_t 1 - 1 kron_t L^dag L:
// vec(2 L rho L^dag - L^dag L rho - rho L^dag L).
inline Superoperator simple_dissipator(const Matrix& l) {
    const int n = int(l.rows());
    if (l.cols() != n) throw std::invalid_argument("simple_dissipator: jump operator must be square");
    const Matrix id = Matrix::Identity(n, n);
    const Matrix w = l.adjoint() * l;
    Superoperator s;
    s.dim = n;
    s.kind = SuperopKind::SimpleDissipator;
    s.matrix = Matrix::Zero(n * n, n * n);
    detail::add_kron_t(s.matrix, Complex(2.0, 0.0), l, l.adjoint());
    detail::add_kron_t(s.matrix, Complex(-1.0, 0.0), w, id);
    detail::add_kron_t(s.matrix, Complex(-1.0, 0.0), id, w);
    return s;
}

// C_H + sum_a gamma_a D_{L_a}. Zero jumps is allowed (pure LvN evolution).
inline Superoperator lindbladian(const Matrix& h, const std::vector<Matrix>& jumps,
                                 const std::vector<double>& gammas) {
    detail::require_hermitian(h, "lindbladian");
    if (jumps.size() != gammas.size())
        throw std::invalid_argument("lindbladian: one gamma per jump operator required");
    for (double g : gammas)
        if (!(g > 0.0)) throw std::invalid_argument("lindbladian: gammas must be positive");
    const int n = int(h.rows());
    const Matrix id = Matrix::Identity(n, n);
    Superoperator s;
    s.dim = n;
    s.kind = jumps.empty() ? SuperopKind::LvN
                           : (jumps.size() > 1 ? SuperopKind::MultiDissipator : SuperopKind::Lindbladian);
    s.matrix = Matrix::Zero(n * n, n * n);
    detail::add_kron_t(s.matrix, Complex(0.0, -1.0), h, id);
    detail::add_kron_t(s.matrix, Complex(0.0, +1.0), id, h);
    for (std::size_t a = 0; a < jumps.size(); ++a) {
        const Matrix& l = jumps[a];
        if (int(l.rows()) != n || int(l.cols()) != n)
            throw std::invalid_argument("lindbladian: jump operator dimension mismatch");
        const Matrix w = l.adjoint() * l;
        const Complex g(gammas[a], 0.0);
        detail::add_kron_t(s.matrix, 2.0 * g, l, l.adjoint());
        detail::add_kron_t(s.matrix, -g, w, id);
        detail::add_kron_t(s.matrix, -g, id, w);
    }
    return s;
}

// -i (K kron_t 1 - 1 kron_t K^dag) with K = H - i sum_a gamma_a L_a^dag L_a:
// the generator with every recycling term removed. Not trace preserving.
inline Superoperator noncrossing_truncation(const Matrix& h, const std::vector<Matrix>& jumps,
                                            const std::vector<double>& gammas) {
    detail::require_hermitian(h, "noncrossing_truncation");
    if (jumps.size() != gammas.size())
        throw std::invalid_argument("noncrossing_truncation: one gamma per jump operator required");
    for (double g : gammas)
        if (!(g > 0.0)) throw std::invalid_argument("noncrossing_truncation: gammas must be positive");
    const int n = int(h.rows());
    Matrix k = h;
    for (std::size_t a = 0; a < jumps.size(); ++a)
        k -= Complex(0.0, gammas[a]) * (jumps[a].adjoint() * jumps[a]);
    const Matrix id = Matrix::Identity(n, n);
    Superoperator s;
    s.dim = n;
    s.kind = SuperopKind::NonCrossingTruncation;
    s.matrix = Matrix::Zero(n * n, n * n);
    detail::add_kron_t(s.matrix, Complex(0.0, -1.0), k, id);
    detail::add_kron_t(s.matrix, Complex(0.0, +1.0), id, k.adjoint());
    return s;
}

// ------------------------------ steady state ----------------------------------

// rho_ss = (L^dag L)^{-1} / tr (L^dag L)^{-1}; the exact stationary state of
// the simple dissipator when M = L^dag L is invertible.
inline DensityMatrix steady_state(const Matrix& l) {
    const int n = int(l.rows());
    const Matrix m = l.adjoint() * l;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("steady_state: eigensolve failed");
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12)
        throw std::runtime_error("steady_state: L^dag L is numerically singular (smallest singular value " +
                                 std::to_string(lo > 0.0 ? std::sqrt(lo) : 0.0) + ")");
    const Matrix inv = es.eigenvectors() *
                       es.eigenvalues().cwiseInverse().asDiagonal() *
                       es.eigenvectors().adjoint();
    DensityMatrix rho;
    rho.dim = n;
    rho.entries = inv / inv.trace().real();
    return rho;
}

// ---------------------------- structural checks -------------------------------

// max_(k,l) |sum_i S[(i,i),(k,l)]|, normalized by max|S|: zero for every
// trace-preserving generator.
inline double trace_preservation_defect(const Superoperator& s) {
    const int n = s.dim;
    const double scale = s.matrix.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int col = 0; col < n * n; ++col) {
        Complex acc(0.0, 0.0);
        for (int i = 0; i < n; ++i) acc += s.matrix(i * n + i, col);
        worst = std::max(worst, std::abs(acc));
    }
    return worst / scale;
}

// max |S[(i,j),(k,l)] - conj(S[(j,i),(l,k)])| / max|S|: zero when S maps
// hermitian matrices to hermitian matrices.
inline double hermiticity_preservation_defect(const Superoperator& s) {
    const int n = s.dim;
    const double scale = s.matrix.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Complex d =
                        s.matrix(i * n + j, k * n + l) - std::conj(s.matrix(j * n + i, l * n + k));
                    worst = std::max(worst, std::abs(d));
                }
    return worst / scale;
}

// ------------------------------ LSOP binary IO --------------------------------

// Header {magic "LSOP", version u32, N u32} then N^4 little-endian complex
// doubles in row-major entry order. Assumes a little-endian host.
inline void write_lsop(const std::string& path, const Superoperator& s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_lsop: cannot open " + path);
    out.write("LSOP", 4);
    const std::uint32_t version = 1;
    const std::uint32_t n = std::uint32_t(s.dim);
    out.write(reinterpret_cast<const char*>(&version), 4);
    out.write(reinterpret_cast<const char*>(&n), 4);
    const int d = s.dim * s.dim;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const Complex z = s.matrix(r, c);
            const double parts[2] = {z.real(), z.imag()};
            out.write(reinterpret_cast<const char*>(parts), sizeof(parts));
        }
    if (!out) throw std::runtime_error("write_lsop: write failed for " + path);
}

inline Superoperator read_lsop(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_lsop: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "LSOP", 4) != 0)
        throw std::runtime_error("read_lsop: bad magic in " + path);
    std::uint32_t version = 0, n = 0;
    in.read(reinterpret_cast<char*>(&version), 4);
    in.read(reinterpret_cast<char*>(&n), 4);
    if (!in || version != 1) throw std::runtime_error("read_lsop: unsupported version in " + path);
    Superoperator s;
    s.dim = int(n);
    s.matrix.resize(Eigen::Index(n) * n, Eigen::Index(n) * n);
    const int d = int(n) * int(n);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            double parts[2];
            in.read(reinterpret_cast<char*>(parts), sizeof(parts));
            s.matrix(r, c) = Complex(parts[0], parts[1]);
        }
    if (!in) throw std::runtime_error("read_lsop: truncated file " + path);
    return s;
}

}  // namespace lindff
