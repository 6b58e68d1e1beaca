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

#ifndef NLW_STATE_HPP
#define NLW_STATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nlw/exact.hpp"
#include "nlw/matrix.hpp"

namespace nlw {

/// Basis-string conventions. Party 1 is the leftmost digit of a basis string
/// ("big-endian"): the string "i1 i2 ... iN" indexes the product basis with
/// party 1 as the most significant digit.
std::uint64_t index_of_string(const std::string &bits, const std::vector<std::uint32_t> &dims);
std::string string_of_index(std::uint64_t index, const std::vector<std::uint32_t> &dims);
std::uint64_t space_dim(const std::vector<std::uint32_t> &dims);

enum class Backend { exact, floating };

/// A pure N-party state stored sparsely over the computational basis.
///
/// Exact backend: amplitude(s) = (re_s + i*im_s)/sqrt(M) with Gaussian-integer
/// numerators and one shared squared norm M = sum |numerator|^2, so
/// orthogonality and corner overlaps are decidable exactly. Float backend:
/// arbitrary complex amplitudes, unit norm within 1e-12.
class StateVector {
  public:
    struct Term {
        std::uint64_t index;
        cplx amp;
    };
    struct ExactTerm {
        std::uint64_t index;
        GaussInt coeff;
    };

    static StateVector exact(std::string name, std::uint32_t num_parties,
                             std::vector<std::uint32_t> local_dims,
                             const std::vector<std::pair<std::string, GaussInt>> &terms);
    static StateVector floating(std::string name, std::uint32_t num_parties,
                                std::vector<std::uint32_t> local_dims,
                                const std::vector<std::pair<std::string, cplx>> &terms);

    const std::string &name() const { return name_; }
    std::uint32_t num_parties() const { return num_parties_; }
    const std::vector<std::uint32_t> &local_dims() const { return local_dims_; }
    Backend backend() const { return backend_; }
    std::uint64_t dim() const { return space_dim(local_dims_); }

    /// Sorted by basis index; exact states expose the float view too.
    const std::vector<Term> &terms() const { return terms_; }
    const std::vector<ExactTerm> &exact_terms() const;
    std::int64_t norm_sq() const;  // the shared M (exact backend only)

    cplx amplitude(std::uint64_t index) const;
    GaussInt exact_coeff(std::uint64_t index) const;

    std::string basis_string(std::uint64_t index) const { return string_of_index(index, local_dims_); }

  private:
    std::string name_;
    std::uint32_t num_parties_ = 0;
    std::vector<std::uint32_t> local_dims_;
    Backend backend_ = Backend::floating;
    std::vector<Term> terms_;
    std::vector<ExactTerm> exact_terms_;
    std::int64_t norm_sq_ = 0;
};

/// <a|b>. Throws on mismatched party structure.
cplx inner_product(const StateVector &a, const StateVector &b);

/// Numerator of <a|b> in units of 1/sqrt(Ma*Mb); zero iff exactly orthogonal.
/// Both states must be exact.
GaussInt exact_inner_numerator(const StateVector &a, const StateVector &b);

bool same_space(const StateVector &a, const StateVector &b);

/// An ordered set of mutually orthogonal states on a shared party structure.
class StateSet {
  public:
    /// Validates shared structure and pairwise orthogonality (exact pairs
    /// exactly, otherwise within `tol`).
    static StateSet checked(std::string name, std::vector<StateVector> states, double tol = 1e-10);

    const std::string &name() const { return name_; }
    const std::vector<StateVector> &states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    const StateVector &operator[](std::size_t i) const { return states_[i]; }
    std::uint32_t num_parties() const { return states_.front().num_parties(); }
    const std::vector<std::uint32_t> &local_dims() const { return states_.front().local_dims(); }
    bool all_exact() const;

  private:
    std::string name_;
    std::vector<StateVector> states_;
};

/// Coefficients for the middle-layer state of the weighted GHZ-pair family:
/// support lies strictly between the all-zeros and all-ones strings, and every
/// string/bit-wise-reverse pair must carry positive total weight.
struct MiddleCoeffs {
    std::uint32_t num_parties = 0;
    bool exact_uniform = false;
    std::vector<std::string> support;                    // exact uniform case
    std::vector<std::pair<std::string, cplx>> values;    // general case

    /// Uniform 1/sqrt(k) weights over `strings` (exact backend downstream).
    static MiddleCoeffs uniform(std::uint32_t num_parties, std::vector<std::string> strings);
    /// Arbitrary complex weights, unit norm within 1e-12 (float backend).
    static MiddleCoeffs general(std::uint32_t num_parties,
                                std::vector<std::pair<std::string, cplx>> values);
};

struct PairSupportCheck {
    bool pass = false;
    /// Reverse pairs with zero total weight, lexicographically smaller string first.
    std::vector<std::pair<std::string, std::string>> violating;
};

/// For each string/bit-wise-reverse pair, requires |l_s|^2 + |l_rev(s)|^2 > 0
/// (float path treats totals <= 1e-18 as zero).
PairSupportCheck check_pair_support(const MiddleCoeffs &coeffs);

std::string bitwise_reverse(const std::string &bits);

}  // namespace nlw

#endif
