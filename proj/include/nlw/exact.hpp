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

#ifndef NLW_EXACT_HPP
#define NLW_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlw {

/// Gaussian integer, used as the numerator of exact state amplitudes
/// (amplitude = (re + i*im)/sqrt(M) with a per-state integer M).
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conjugated() const { return {re, -im}; }

    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }

    /// |z|^2 as a nonnegative integer.
    std::int64_t norm() const { return re * re + im * im; }
};

/// Unreduced nonnegative fraction num/den. Kept unreduced so exact overlaps
/// surface in the natural "hits/M" form (e.g. "2/6").
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }

    bool equals(std::int64_t n, std::int64_t d) const {
        // cross-multiplied, exact
        return static_cast<__int128>(num) * d == static_cast<__int128>(n) * den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace nlw

#endif
