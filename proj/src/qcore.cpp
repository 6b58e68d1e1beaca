// Copyright 2026 The nlw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlw/qcore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace nlw {

namespace {
std::atomic<std::size_t> g_dim_cap{1u << 13};
}

std::size_t dim_cap() { return g_dim_cap.load(); }
void set_dim_cap(std::size_t cap) {
    if (cap < 2) throw std::invalid_argument("dimension cap must be at least 2");
    g_dim_cap.store(cap);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t cap = dim_cap();
    if (a.rows() == 0 || b.rows() == 0 || a.cols() == 0 || b.cols() == 0)
        throw std::invalid_argument("kron: empty operand");
    if (a.rows() > cap / b.rows() || a.cols() > cap / b.cols())
        throw dim_cap_error("kron: result dimension exceeds cap " + std::to_string(cap));
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix &a, const BipartiteShape &shape, Side side) {
    shape.check(a);
    const std::size_t m = shape.left_dim, n = shape.right_dim;
    ComplexMatrix r(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t d = 0; d < n; ++d) {
                    if (side == Side::left)
                        r(i * n + c, j * n + d) = a(j * n + c, i * n + d);
                    else
                        r(i * n + c, j * n + d) = a(i * n + d, j * n + c);
                }
    return r;
}

ComplexMatrix partial_trace(const ComplexMatrix &a, const BipartiteShape &shape, Side keep) {
    shape.check(a);
    const std::size_t m = shape.left_dim, n = shape.right_dim;
    if (keep == Side::left) {
        ComplexMatrix r(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                cplx s = 0.0;
                for (std::size_t c = 0; c < n; ++c) s += a(i * n + c, j * n + c);
                r(i, j) = s;
            }
        return r;
    }
    ComplexMatrix r(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < m; ++i) s += a(i * n + c, i * n + d);
            r(c, d) = s;
        }
    return r;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One Jacobi rotation annihilating A(p,q); accumulates the rotation into V.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (std::abs(tau) > 1e150) {
        t = 1.0 / (2.0 * tau);
    } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    const cplx s_conj_phase = s * std::conj(phase);
    const cplx s_phase = s * phase;

    // columns p,q:  A <- A * G
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s_conj_phase * aiq;
        a(i, q) = s * aip + c * std::conj(phase) * aiq;
    }
    // rows p,q:  A <- G^H * A
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s_phase * aqj;
        a(q, j) = s * apj + c * phase * aqj;
    }
    // pivot entries, in exact arithmetic
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(app * c * c - 2.0 * r * s * c + aqq * s * s, 0.0);
    a(q, q) = cplx(app * s * s + 2.0 * r * s * c + aqq * c * c, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s_conj_phase * viq;
        v(i, q) = s * vip + c * std::conj(phase) * viq;
    }
}

}  // namespace

namespace {

// Rotates until the off-diagonal norm drops below 1e-12 of the matrix scale.
// w must be Hermitian on entry; v accumulates the rotations on top of
// whatever basis it holds.
void jacobi_sweeps(ComplexMatrix &w, ComplexMatrix &v) {
    const std::size_t n = w.rows();
    const double scale = std::max(1.0, w.frobenius_norm());
    const double target = 1e-12 * scale;

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(w) > target) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eig: Jacobi sweep limit reached");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(w(p, q)) > 1e-300) jacobi_rotate(w, v, p, q);
    }
}

// V diag(max(w_ii, 0)) V^H; exactly Hermitian, PSD for any V.
ComplexMatrix clip_reconstruct(const ComplexMatrix &w, const ComplexMatrix &v) {
    const std::size_t n = w.rows();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = w(k, k).real();
        if (lam <= 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx lv = lam * v(i, k);
            for (std::size_t j = 0; j < n; ++j) r(i, j) += lv * std::conj(v(j, k));
        }
    }
    return r;
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix &a, double herm_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
    if (a.hermitian_defect() > herm_tol)
        throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");

    const std::size_t n = a.rows();
    ComplexMatrix w = a.symmetrized();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_sweeps(w, v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    EigDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix psd_project(const ComplexMatrix &a, double herm_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("psd_project: matrix not square");
    if (a.hermitian_defect() > herm_tol)
        throw std::invalid_argument("psd_project: input not Hermitian within tolerance");
    ComplexMatrix w = a.symmetrized();
    ComplexMatrix v = ComplexMatrix::identity(a.rows());
    jacobi_sweeps(w, v);
    return clip_reconstruct(w, v);
}

double min_eigenvalue(const ComplexMatrix &a, double herm_tol) {
    return hermitian_eig(a, herm_tol).eigenvalues.front();
}

PsdProjector::PsdProjector(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("PsdProjector: dimension must be positive");
}

ComplexMatrix PsdProjector::project(const ComplexMatrix &a, double herm_tol) {
    if (a.rows() != dim_ || a.cols() != dim_)
        throw std::invalid_argument("PsdProjector: dimension mismatch");
    if (a.hermitian_defect() > herm_tol)
        throw std::invalid_argument("PsdProjector: input not Hermitian within tolerance");
    ComplexMatrix w, v;
    if (warm_) {
        w = (basis_.adjoint() * a * basis_).symmetrized();
        v = basis_;
    } else {
        w = a.symmetrized();
        v = ComplexMatrix::identity(dim_);
    }
    jacobi_sweeps(w, v);
    basis_ = v;
    warm_ = true;
    return clip_reconstruct(w, v);
}

}  // namespace nlw
