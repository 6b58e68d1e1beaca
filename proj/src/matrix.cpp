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

#include "nlw/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace nlw {

static void check_same_shape(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    check_same_shape(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (auto &v : a_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    if (rows_ != cols_) throw std::invalid_argument("hermitian_defect: matrix not square");
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
    if (rows_ != cols_) throw std::invalid_argument("symmetrized: matrix not square");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

}  // namespace nlw
