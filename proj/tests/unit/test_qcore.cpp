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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nlw/qcore.hpp"

namespace {

using nlw::BipartiteShape;
using nlw::ComplexMatrix;
using nlw::cplx;
using nlw::Side;

ComplexMatrix random_hermitian(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = cplx(dist(rng), dist(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

ComplexMatrix bell_projector(int sign) {
    ComplexMatrix m(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    m(0, 3) = 0.5 * sign;
    m(3, 0) = 0.5 * sign;
    return m;
}

}  // namespace

TEST_CASE("kron multiplies dimensions and entries") {
    ComplexMatrix a(2, 2);
    a(0, 0) = 1.0;
    a(0, 1) = 2.0;
    a(1, 0) = cplx(0.0, 1.0);
    a(1, 1) = -1.0;
    ComplexMatrix b = ComplexMatrix::identity(3);
    ComplexMatrix k = nlw::kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    CHECK(k(0, 0) == cplx(1.0));
    CHECK(k(1, 4) == cplx(2.0));
    CHECK(k(4, 1) == cplx(0.0, 1.0));
    CHECK(k(5, 5) == cplx(-1.0));
    CHECK(k(0, 1) == cplx(0.0));
}

TEST_CASE("kron refuses to exceed the dimension cap") {
    std::size_t old_cap = nlw::dim_cap();
    nlw::set_dim_cap(8);
    ComplexMatrix a = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(nlw::kron(a, a), nlw::dim_cap_error);
    CHECK_NOTHROW(nlw::kron(a, ComplexMatrix::identity(2)));
    nlw::set_dim_cap(old_cap);
}

TEST_CASE("partial transpose of the Bell projector has eigenvalues -1/2, 1/2, 1/2, 1/2") {
    BipartiteShape shape{2, 2};
    for (int sign : {+1, -1}) {
        ComplexMatrix pt = nlw::partial_transpose(bell_projector(sign), shape, Side::left);
        auto eig = nlw::hermitian_eig(pt);
        REQUIRE(eig.eigenvalues.size() == 4);
        CHECK(std::abs(eig.eigenvalues[0] + 0.5) <= 1e-10);
        for (int i = 1; i < 4; ++i) {
            CHECK(std::abs(eig.eigenvalues[i] - 0.5) <= 1e-10);
        }
    }
}

TEST_CASE("partial transpose is involutive and preserves trace, norm and Hermiticity") {
    for (auto [l, r] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
        BipartiteShape shape{l, r};
        ComplexMatrix a = random_hermitian(l * r, 7u * static_cast<std::uint32_t>(l + 10 * r));
        for (Side side : {Side::left, Side::right}) {
            ComplexMatrix pt = nlw::partial_transpose(a, shape, side);
            CHECK(pt.is_hermitian());
            CHECK(std::abs(pt.trace() - a.trace()) < 1e-14);
            CHECK(pt.frobenius_norm() == doctest::Approx(a.frobenius_norm()).epsilon(1e-14));
            ComplexMatrix back = nlw::partial_transpose(pt, shape, side);
            CHECK((back - a).frobenius_norm() < 1e-14);
        }
    }
}

TEST_CASE("partial transposes on both sides compose to the full transpose") {
    BipartiteShape shape{2, 3};
    ComplexMatrix a = random_hermitian(6, 99);
    ComplexMatrix both = nlw::partial_transpose(
        nlw::partial_transpose(a, shape, Side::left), shape, Side::right);
    CHECK((both - a.transpose()).frobenius_norm() < 1e-14);
}

TEST_CASE("partial trace of a product operator recovers the factors") {
    ComplexMatrix a = random_hermitian(2, 11);
    ComplexMatrix b = random_hermitian(3, 12);
    BipartiteShape shape{2, 3};
    ComplexMatrix ab = nlw::kron(a, b);

    ComplexMatrix left = nlw::partial_trace(ab, shape, Side::left);
    ComplexMatrix scaled_a = b.trace() * a;
    CHECK((left - scaled_a).frobenius_norm() < 1e-13);

    ComplexMatrix right = nlw::partial_trace(ab, shape, Side::right);
    ComplexMatrix scaled_b = a.trace() * b;
    CHECK((right - scaled_b).frobenius_norm() < 1e-13);

    CHECK(std::abs(left.trace() - ab.trace()) < 1e-13);
}

TEST_CASE("hermitian_eig returns an ascending spectrum and a reconstructing basis") {
    ComplexMatrix a = random_hermitian(6, 21);
    auto eig = nlw::hermitian_eig(a);
    REQUIRE(eig.eigenvalues.size() == 6);
    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));

    ComplexMatrix rebuilt(6, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                rebuilt(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                                 std::conj(eig.eigenvectors(j, k));
            }
        }
    }
    CHECK((rebuilt - a).frobenius_norm() < 1e-10);

    ComplexMatrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
    CHECK((gram - ComplexMatrix::identity(6)).frobenius_norm() < 1e-12);
}

TEST_CASE("hermitian_eig rejects a matrix that is not Hermitian") {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(nlw::hermitian_eig(a), std::invalid_argument);
}

TEST_CASE("psd_project clips negative eigenvalues and fixes PSD inputs") {
    ComplexMatrix d(2, 2);
    d(0, 0) = -1.0;
    d(1, 1) = 2.0;
    ComplexMatrix p = nlw::psd_project(d);
    CHECK(std::abs(p(0, 0)) < 1e-14);
    CHECK(std::abs(p(1, 1) - 2.0) < 1e-14);

    ComplexMatrix a = random_hermitian(5, 31);
    ComplexMatrix aa = a * a;  // PSD by construction
    CHECK((nlw::psd_project(aa) - aa).frobenius_norm() < 1e-10);

    ComplexMatrix proj = nlw::psd_project(a);
    CHECK(nlw::min_eigenvalue(proj) > -1e-12);
    // Best Frobenius approximation: the residual a - proj is the negative part,
    // so it must be orthogonal to proj.
    ComplexMatrix res = a - proj;
    cplx overlap = (proj * res).trace();
    CHECK(std::abs(overlap) < 1e-10);
}

TEST_CASE("min_eigenvalue matches the spectrum bottom") {
    ComplexMatrix a = random_hermitian(4, 41);
    auto eig = nlw::hermitian_eig(a);
    CHECK(nlw::min_eigenvalue(a) == doctest::Approx(eig.eigenvalues.front()).epsilon(1e-12));
}

TEST_CASE("warm-started projector tracks a drifting matrix exactly") {
    nlw::PsdProjector warm(4);
    ComplexMatrix base = random_hermitian(4, 51);
    ComplexMatrix drift = random_hermitian(4, 52);
    for (int step = 0; step <= 20; ++step) {
        ComplexMatrix a = base;
        ComplexMatrix scaled = (0.01 * step) * drift;
        a += scaled;
        ComplexMatrix fresh = nlw::psd_project(a);
        ComplexMatrix warmed = warm.project(a);
        CHECK((warmed - fresh).frobenius_norm() < 1e-9);
        CHECK(nlw::min_eigenvalue(warmed) > -1e-12);
    }
}

TEST_CASE("matrix arithmetic round trip") {
    ComplexMatrix a = random_hermitian(3, 61);
    ComplexMatrix b = random_hermitian(3, 62);
    ComplexMatrix sum = a + b;
    ComplexMatrix diff = sum - b;
    CHECK((diff - a).frobenius_norm() < 1e-14);

    ComplexMatrix two_a = cplx(2.0) * a;
    ComplexMatrix half = two_a;
    half *= cplx(0.5);
    CHECK((half - a).frobenius_norm() < 1e-14);

    CHECK(a.symmetrized().is_hermitian());
    CHECK(a.adjoint().is_hermitian());
    CHECK(std::abs(a.hermitian_defect()) < 1e-15);
}
