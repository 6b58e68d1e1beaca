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

#include "nlw/witness.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nlw/flatten.hpp"

namespace nlw {

bool CornerOverlap::positive() const {
    if (exact) return exact->num > 0;
    return value > 1e-12;
}

std::string CornerOverlap::str() const {
    if (exact) return exact->str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

CornerOverlap corner_overlap(const StateVector &third, const Bipartition &b) {
    const CornerSubspace corners = corner_subspace(b);
    CornerOverlap overlap;
    if (third.backend() == Backend::exact) {
        std::int64_t num = 0;
        for (const auto &s : corners.strings) {
            num += third.exact_coeff(index_of_string(s, third.local_dims())).norm();
        }
        overlap.exact = Fraction{num, third.norm_sq()};
        overlap.value = overlap.exact->value();
    } else {
        double sum = 0;
        for (const auto &s : corners.strings) {
            sum += std::norm(third.amplitude(index_of_string(s, third.local_dims())));
        }
        overlap.value = sum;
    }
    return overlap;
}

namespace {

/// Supported exactly on {0^N, 1^N} with leading amplitude +1/sqrt(2); sign is
/// the amplitude sign on 1^N.
bool ghz_form(const StateVector &s, int &sign) {
    const std::uint64_t zero_index = 0;
    const std::uint64_t one_index = index_of_string(std::string(s.num_parties(), '1'), s.local_dims());
    if (s.backend() == Backend::exact) {
        if (s.exact_terms().size() != 2) return false;
        const GaussInt c0 = s.exact_coeff(zero_index);
        const GaussInt c1 = s.exact_coeff(one_index);
        if (c0.im != 0 || c1.im != 0 || c0.re <= 0) return false;
        if (c1.re != c0.re && c1.re != -c0.re) return false;
        sign = c1.re > 0 ? 1 : -1;
        return true;
    }
    if (s.terms().size() != 2) return false;
    const cplx a0 = s.amplitude(zero_index);
    const cplx a1 = s.amplitude(one_index);
    const double root_half = std::sqrt(0.5);
    if (std::abs(a0 - cplx(root_half, 0)) > 1e-10) return false;
    if (std::abs(a1 - cplx(root_half, 0)) <= 1e-10) {
        sign = 1;
        return true;
    }
    if (std::abs(a1 - cplx(-root_half, 0)) <= 1e-10) {
        sign = -1;
        return true;
    }
    return false;
}

}  // namespace

bool is_ghz_pair(const StateVector &a, const StateVector &b) {
    if (!same_space(a, b)) return false;
    int sign_a = 0, sign_b = 0;
    return ghz_form(a, sign_a) && ghz_form(b, sign_b) && sign_a != sign_b;
}

Certificate certify_bipartition(const StateSet &set, const Bipartition &b) {
    if (set.size() != 3)
        throw std::invalid_argument("certificates require exactly three states");
    if (b.n_parties() != set.num_parties())
        throw std::invalid_argument("bipartition party count does not match the set");

    Certificate cert{b};
    cert.bell_pair_ok = is_ghz_pair(set[0], set[1]);
    cert.overlap_sq = corner_overlap(set[2], b);
    if (!cert.bell_pair_ok)
        cert.verdict = "inapplicable(not-bell-pair)";
    else if (!cert.overlap_sq.positive())
        cert.verdict = "inapplicable(zero-overlap)";
    else
        cert.verdict = "certified-PPT-indistinguishable";
    return cert;
}

NonlocalityReport certify_all(const StateSet &set) {
    if (set.size() != 3)
        throw std::invalid_argument("the sweep requires exactly three states");
    NonlocalityReport report;
    report.set_name = set.name();
    report.set_size = set.size();
    bool all = true;
    for (const auto &b : enumerate_bipartitions(set.num_parties())) {
        report.certificates.push_back(certify_bipartition(set, b));
        all = all && report.certificates.back().certified();
    }
    report.overall = all ? "genuinely-nonlocal-certified" : "undetermined";
    report.strong_nonlocality = all;
    return report;
}

}  // namespace nlw
