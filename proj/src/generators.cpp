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

#include "nlw/generators.hpp"

namespace nlw {

namespace {

const GaussInt kOne{1, 0};
const GaussInt kMinusOne{-1, 0};

std::vector<std::uint32_t> qubits(std::uint32_t n) { return std::vector<std::uint32_t>(n, 2); }

}  // namespace

StateVector ghz_plus(std::uint32_t n_parties) {
    return StateVector::exact("ghz+", n_parties, qubits(n_parties),
                              {{std::string(n_parties, '0'), kOne},
                               {std::string(n_parties, '1'), kOne}});
}

StateVector ghz_minus(std::uint32_t n_parties) {
    return StateVector::exact("ghz-", n_parties, qubits(n_parties),
                              {{std::string(n_parties, '0'), kOne},
                               {std::string(n_parties, '1'), kMinusOne}});
}

StateSet bell_triple() {
    StateVector bell3 = StateVector::exact("bell3", 2, qubits(2), {{"01", kOne}, {"10", kOne}});
    return StateSet::checked("bell-triple", {ghz_plus(2), ghz_minus(2), std::move(bell3)});
}

StateSet ghosh_set() {
    StateVector ket01 = StateVector::exact("ket01", 2, qubits(2), {{"01", kOne}});
    return StateSet::checked("ghosh", {ghz_plus(2), ghz_minus(2), std::move(ket01)});
}

StateSet lifted_bell_triple(std::uint32_t n_parties, std::uint32_t l, std::uint32_t r,
                            const Bipartition &split) {
    if (n_parties < 3) throw std::invalid_argument("lifted Bell triple needs at least 3 parties");
    if (split.n_parties() != n_parties)
        throw std::invalid_argument("bipartition party count does not match");
    if (l < 1 || l > n_parties || r < 1 || r > n_parties || l == r)
        throw std::invalid_argument("need two distinct parties to carry the Bell pair");
    if (!split.on_left(l) || split.on_left(r))
        throw std::invalid_argument("Bell pair parties must sit on opposite sides of the split");

    auto with_bits = [&](char bit_l, char bit_r) {
        std::string s(n_parties, '0');
        s[l - 1] = bit_l;
        s[r - 1] = bit_r;
        return s;
    };
    StateVector s1 = StateVector::exact("bell1", n_parties, qubits(n_parties),
                                        {{with_bits('0', '0'), kOne}, {with_bits('1', '1'), kOne}});
    StateVector s2 = StateVector::exact("bell2", n_parties, qubits(n_parties),
                                        {{with_bits('0', '0'), kOne}, {with_bits('1', '1'), kMinusOne}});
    StateVector s3 = StateVector::exact("bell3", n_parties, qubits(n_parties),
                                        {{with_bits('0', '1'), kOne}, {with_bits('1', '0'), kOne}});
    return StateSet::checked("lifted-bell", {std::move(s1), std::move(s2), std::move(s3)});
}

StateSet corner_bell_triple(const Bipartition &split) {
    const std::uint32_t n = split.n_parties();
    std::string a(n, '1');
    for (std::uint32_t p = 1; p <= n; ++p) {
        if (split.on_left(p)) a[p - 1] = '0';
    }
    StateVector third = StateVector::exact("corner-pair", n, qubits(n),
                                           {{a, kOne}, {bitwise_reverse(a), kOne}});
    return StateSet::checked("corner-bell", {ghz_plus(n), ghz_minus(n), std::move(third)});
}

StateSet ghz_w_set(std::uint32_t n_parties) {
    std::vector<std::pair<std::string, GaussInt>> terms;
    std::string name;
    if (n_parties == 3) {
        name = "w";
        for (const char *s : {"001", "010", "100"}) terms.emplace_back(s, kOne);
    } else if (n_parties == 4) {
        name = "w-like";
        for (const char *s : {"0001", "0010", "0100", "1000", "0011", "0101", "0110"})
            terms.emplace_back(s, kOne);
    } else {
        throw std::invalid_argument("the W-completed family is defined for 3 or 4 parties");
    }
    StateVector third = StateVector::exact(std::move(name), n_parties, qubits(n_parties), terms);
    return StateSet::checked("ghz-w", {ghz_plus(n_parties), ghz_minus(n_parties), std::move(third)});
}

StateSet ghz_uniform_middle_set(std::uint32_t n_parties) {
    if (n_parties < 3)
        throw std::invalid_argument("the uniform middle-layer family needs at least 3 parties");
    if (n_parties > 62) throw std::invalid_argument("too many parties for the exact backend");
    std::vector<std::pair<std::string, GaussInt>> terms;
    const std::uint64_t total = std::uint64_t(1) << n_parties;
    for (std::uint64_t x = 1; x + 1 < total; ++x) {
        std::string s(n_parties, '0');
        for (std::uint32_t p = 0; p < n_parties; ++p) {
            if (x >> (n_parties - 1 - p) & 1) s[p] = '1';
        }
        terms.emplace_back(std::move(s), kOne);
    }
    StateVector third =
        StateVector::exact("middle-uniform", n_parties, qubits(n_parties), terms);
    return StateSet::checked("ghz-middle",
                             {ghz_plus(n_parties), ghz_minus(n_parties), std::move(third)});
}

namespace {

std::string format_pairs(const std::vector<std::pair<std::string, std::string>> &pairs) {
    std::string msg = "middle-layer coefficients leave reverse pairs unsupported:";
    for (const auto &[a, b] : pairs) msg += " {" + a + "," + b + "}";
    return msg;
}

}  // namespace

pair_support_error::pair_support_error(std::vector<std::pair<std::string, std::string>> pairs)
    : std::invalid_argument(format_pairs(pairs)), violating(std::move(pairs)) {}

StateSet ghz_weighted_middle_set(const MiddleCoeffs &coeffs) {
    const std::uint32_t n = coeffs.num_parties;
    if (n < 3)
        throw std::invalid_argument("the weighted middle-layer family needs at least 3 parties");
    PairSupportCheck check = check_pair_support(coeffs);
    if (!check.pass) throw pair_support_error(std::move(check.violating));

    StateVector third = [&] {
        if (coeffs.exact_uniform) {
            std::vector<std::pair<std::string, GaussInt>> terms;
            for (const auto &s : coeffs.support) terms.emplace_back(s, kOne);
            return StateVector::exact("middle-weighted", n, qubits(n), terms);
        }
        return StateVector::floating("middle-weighted", n, qubits(n), coeffs.values);
    }();
    return StateSet::checked("ghz-weighted", {ghz_plus(n), ghz_minus(n), std::move(third)});
}

}  // namespace nlw
