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

#include "nlw/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlw/qcore.hpp"

namespace nlw {

namespace {

void check_dims(std::uint32_t num_parties, const std::vector<std::uint32_t> &dims) {
    if (num_parties == 0) throw std::invalid_argument("need at least one party");
    if (dims.size() != num_parties) throw std::invalid_argument("one local dimension per party");
    for (auto d : dims) {
        if (d < 2) throw std::invalid_argument("local dimensions must be at least 2");
    }
    std::uint64_t total = 1;
    const std::uint64_t cap = dim_cap();
    for (auto d : dims) {
        if (total > cap / d)
            throw dim_cap_error("state space dimension exceeds cap " + std::to_string(cap));
        total *= d;
    }
}

}  // namespace

std::uint64_t space_dim(const std::vector<std::uint32_t> &dims) {
    std::uint64_t total = 1;
    for (auto d : dims) total *= d;
    return total;
}

std::uint64_t index_of_string(const std::string &bits, const std::vector<std::uint32_t> &dims) {
    if (bits.size() != dims.size())
        throw std::invalid_argument("basis string '" + bits + "' has wrong length");
    std::uint64_t index = 0;
    for (std::size_t p = 0; p < dims.size(); ++p) {
        const char ch = bits[p];
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("basis string '" + bits + "' has a non-digit");
        const std::uint32_t v = static_cast<std::uint32_t>(ch - '0');
        if (v >= dims[p])
            throw std::invalid_argument("basis string '" + bits + "' exceeds a local dimension");
        index = index * dims[p] + v;
    }
    return index;
}

std::string string_of_index(std::uint64_t index, const std::vector<std::uint32_t> &dims) {
    std::string bits(dims.size(), '0');
    for (std::size_t p = dims.size(); p-- > 0;) {
        bits[p] = static_cast<char>('0' + index % dims[p]);
        index /= dims[p];
    }
    if (index != 0) throw std::invalid_argument("basis index out of range");
    return bits;
}

StateVector StateVector::exact(std::string name, std::uint32_t num_parties,
                               std::vector<std::uint32_t> local_dims,
                               const std::vector<std::pair<std::string, GaussInt>> &terms) {
    check_dims(num_parties, local_dims);
    if (terms.empty()) throw std::invalid_argument("state '" + name + "' has no terms");

    StateVector s;
    s.name_ = std::move(name);
    s.num_parties_ = num_parties;
    s.local_dims_ = std::move(local_dims);
    s.backend_ = Backend::exact;

    std::int64_t m = 0;
    for (const auto &[bits, coeff] : terms) {
        if (coeff.is_zero())
            throw std::invalid_argument("state '" + s.name_ + "' has a zero term");
        const std::uint64_t index = index_of_string(bits, s.local_dims_);
        for (const auto &t : s.exact_terms_) {
            if (t.index == index)
                throw std::invalid_argument("state '" + s.name_ + "' repeats basis string " + bits);
        }
        s.exact_terms_.push_back({index, coeff});
        m += coeff.norm();
    }
    std::sort(s.exact_terms_.begin(), s.exact_terms_.end(),
              [](const ExactTerm &a, const ExactTerm &b) { return a.index < b.index; });
    s.norm_sq_ = m;

    const double root = std::sqrt(static_cast<double>(m));
    s.terms_.reserve(s.exact_terms_.size());
    for (const auto &t : s.exact_terms_) {
        s.terms_.push_back({t.index, cplx(static_cast<double>(t.coeff.re) / root,
                                          static_cast<double>(t.coeff.im) / root)});
    }
    return s;
}

StateVector StateVector::floating(std::string name, std::uint32_t num_parties,
                                  std::vector<std::uint32_t> local_dims,
                                  const std::vector<std::pair<std::string, cplx>> &terms) {
    check_dims(num_parties, local_dims);
    if (terms.empty()) throw std::invalid_argument("state '" + name + "' has no terms");

    StateVector s;
    s.name_ = std::move(name);
    s.num_parties_ = num_parties;
    s.local_dims_ = std::move(local_dims);
    s.backend_ = Backend::floating;

    double norm_sq = 0;
    for (const auto &[bits, amp] : terms) {
        const std::uint64_t index = index_of_string(bits, s.local_dims_);
        for (const auto &t : s.terms_) {
            if (t.index == index)
                throw std::invalid_argument("state '" + s.name_ + "' repeats basis string " + bits);
        }
        s.terms_.push_back({index, amp});
        norm_sq += std::norm(amp);
    }
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw std::invalid_argument("state '" + s.name_ + "' is not normalized");
    std::sort(s.terms_.begin(), s.terms_.end(),
              [](const Term &a, const Term &b) { return a.index < b.index; });
    return s;
}

const std::vector<StateVector::ExactTerm> &StateVector::exact_terms() const {
    if (backend_ != Backend::exact)
        throw std::logic_error("state '" + name_ + "' has no exact representation");
    return exact_terms_;
}

std::int64_t StateVector::norm_sq() const {
    if (backend_ != Backend::exact)
        throw std::logic_error("state '" + name_ + "' has no exact representation");
    return norm_sq_;
}

cplx StateVector::amplitude(std::uint64_t index) const {
    for (const auto &t : terms_) {
        if (t.index == index) return t.amp;
        if (t.index > index) break;
    }
    return cplx(0, 0);
}

GaussInt StateVector::exact_coeff(std::uint64_t index) const {
    for (const auto &t : exact_terms()) {
        if (t.index == index) return t.coeff;
        if (t.index > index) break;
    }
    return GaussInt{0, 0};
}

bool same_space(const StateVector &a, const StateVector &b) {
    return a.num_parties() == b.num_parties() && a.local_dims() == b.local_dims();
}

cplx inner_product(const StateVector &a, const StateVector &b) {
    if (!same_space(a, b)) throw std::invalid_argument("states live on different spaces");
    cplx acc(0, 0);
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->index < ib->index) {
            ++ia;
        } else if (ib->index < ia->index) {
            ++ib;
        } else {
            acc += std::conj(ia->amp) * ib->amp;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

GaussInt exact_inner_numerator(const StateVector &a, const StateVector &b) {
    if (!same_space(a, b)) throw std::invalid_argument("states live on different spaces");
    GaussInt acc{0, 0};
    auto ia = a.exact_terms().begin();
    auto ib = b.exact_terms().begin();
    while (ia != a.exact_terms().end() && ib != b.exact_terms().end()) {
        if (ia->index < ib->index) {
            ++ia;
        } else if (ib->index < ia->index) {
            ++ib;
        } else {
            acc = acc + ia->coeff.conjugated() * ib->coeff;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

StateSet StateSet::checked(std::string name, std::vector<StateVector> states, double tol) {
    if (states.empty()) throw std::invalid_argument("state set '" + name + "' is empty");
    for (std::size_t i = 1; i < states.size(); ++i) {
        if (!same_space(states[0], states[i]))
            throw std::invalid_argument("state set '" + name + "' mixes party structures");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            const auto &a = states[i];
            const auto &b = states[j];
            if (a.backend() == Backend::exact && b.backend() == Backend::exact) {
                if (!exact_inner_numerator(a, b).is_zero())
                    throw std::invalid_argument("states '" + a.name() + "' and '" + b.name() +
                                                "' are not orthogonal");
            } else if (std::abs(inner_product(a, b)) > tol) {
                throw std::invalid_argument("states '" + a.name() + "' and '" + b.name() +
                                            "' are not orthogonal");
            }
        }
    }
    StateSet set;
    set.name_ = std::move(name);
    set.states_ = std::move(states);
    return set;
}

bool StateSet::all_exact() const {
    return std::all_of(states_.begin(), states_.end(),
                       [](const StateVector &s) { return s.backend() == Backend::exact; });
}

std::string bitwise_reverse(const std::string &bits) {
    std::string out = bits;
    for (auto &ch : out) {
        if (ch == '0')
            ch = '1';
        else if (ch == '1')
            ch = '0';
        else
            throw std::invalid_argument("bit string '" + bits + "' has a non-binary digit");
    }
    return out;
}

namespace {

void check_middle_string(const std::string &bits, std::uint32_t num_parties) {
    if (bits.size() != num_parties)
        throw std::invalid_argument("string '" + bits + "' has wrong length");
    bool any0 = false, any1 = false;
    for (char ch : bits) {
        if (ch == '0')
            any0 = true;
        else if (ch == '1')
            any1 = true;
        else
            throw std::invalid_argument("string '" + bits + "' has a non-binary digit");
    }
    if (!any0 || !any1)
        throw std::invalid_argument("string '" + bits + "' is not strictly between all-zeros and all-ones");
}

}  // namespace

MiddleCoeffs MiddleCoeffs::uniform(std::uint32_t num_parties, std::vector<std::string> strings) {
    if (strings.empty()) throw std::invalid_argument("middle layer needs at least one string");
    for (const auto &s : strings) check_middle_string(s, num_parties);
    std::sort(strings.begin(), strings.end());
    for (std::size_t i = 1; i < strings.size(); ++i) {
        if (strings[i] == strings[i - 1])
            throw std::invalid_argument("string '" + strings[i] + "' repeats");
    }
    MiddleCoeffs c;
    c.num_parties = num_parties;
    c.exact_uniform = true;
    c.support = std::move(strings);
    return c;
}

MiddleCoeffs MiddleCoeffs::general(std::uint32_t num_parties,
                                   std::vector<std::pair<std::string, cplx>> values) {
    if (values.empty()) throw std::invalid_argument("middle layer needs at least one string");
    double norm_sq = 0;
    for (const auto &[s, v] : values) {
        check_middle_string(s, num_parties);
        norm_sq += std::norm(v);
    }
    std::sort(values.begin(), values.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].first == values[i - 1].first)
            throw std::invalid_argument("string '" + values[i].first + "' repeats");
    }
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw std::invalid_argument("middle-layer weights are not normalized");
    MiddleCoeffs c;
    c.num_parties = num_parties;
    c.exact_uniform = false;
    c.values = std::move(values);
    return c;
}

PairSupportCheck check_pair_support(const MiddleCoeffs &coeffs) {
    PairSupportCheck result;
    result.pass = true;

    auto weight = [&](const std::string &s) -> double {
        if (coeffs.exact_uniform) {
            return std::binary_search(coeffs.support.begin(), coeffs.support.end(), s) ? 1.0 : 0.0;
        }
        for (const auto &[str, v] : coeffs.values) {
            if (str == s) return std::norm(v);
        }
        return 0.0;
    };

    const std::uint32_t n = coeffs.num_parties;
    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t x = 1; x + 1 < total; ++x) {
        std::string s(n, '0');
        for (std::uint32_t p = 0; p < n; ++p) {
            if (x >> (n - 1 - p) & 1) s[p] = '1';
        }
        const std::string rev = bitwise_reverse(s);
        if (s > rev) continue;
        if (weight(s) + weight(rev) <= 1e-18) {
            result.pass = false;
            result.violating.emplace_back(s, rev);
        }
    }
    return result;
}

}  // namespace nlw
