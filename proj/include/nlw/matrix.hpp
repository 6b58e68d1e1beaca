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

#ifndef NLW_MATRIX_HPP
#define NLW_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlw {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Values are immutable once built by the
/// operations in qcore.hpp; the type itself is a plain value.
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    cplx &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    cplx *data() { return a_.data(); }
    const cplx *data() const { return a_.data(); }

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(cplx s);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    cplx trace() const;
    double frobenius_norm() const;

    /// max_{i,j} |a(i,j) - conj(a(j,i))|; square matrices only.
    double hermitian_defect() const;
    bool is_hermitian(double tol = 1e-10) const { return rows_ == cols_ && hermitian_defect() <= tol; }

    /// (A + A^dag)/2, absorbing roundoff before eigendecompositions.
    ComplexMatrix symmetrized() const;

  private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

/// Left/right tensor-factor dimensions of a bipartite operator.
struct BipartiteShape {
    std::size_t left_dim;
    std::size_t right_dim;

    std::size_t total() const { return left_dim * right_dim; }

    void check(const ComplexMatrix &a) const {
        if (left_dim < 2 || right_dim < 2)
            throw std::invalid_argument("BipartiteShape: both factors must have dimension >= 2");
        if (a.rows() != a.cols() || a.rows() != total())
            throw std::invalid_argument("BipartiteShape: matrix dimension does not equal left_dim*right_dim");
    }
};

}  // namespace nlw

#endif
