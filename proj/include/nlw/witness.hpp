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

#ifndef NLW_WITNESS_HPP
#define NLW_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/exact.hpp"
#include "nlw/state.hpp"

namespace nlw {

/// Squared overlap of a state with the four-string corner block of a
/// bipartition; exact backends yield the unreduced rational (numerator over
/// the state's shared squared norm).
struct CornerOverlap {
    double value = 0;
    std::optional<Fraction> exact;

    bool positive() const;
    std::string str() const;
};

CornerOverlap corner_overlap(const StateVector &third, const Bipartition &b);

/// Per-bipartition certificate for a three-state set. `certified` holds iff
/// the first two states form the GHZ pair on {0^N, 1^N} and the third has
/// positive corner overlap; such a split admits no perfect discrimination by
/// PPT measurements, hence none by local ones. An inapplicable certificate
/// implies nothing about distinguishability.
struct Certificate {
    Bipartition split;
    bool bell_pair_ok = false;
    CornerOverlap overlap_sq;
    std::string verdict;  // certified-PPT-indistinguishable | inapplicable(...)

    bool certified() const { return verdict == "certified-PPT-indistinguishable"; }
};

Certificate certify_bipartition(const StateSet &set, const Bipartition &b);

/// Sweep over every canonical bipartition. `overall` is
/// "genuinely-nonlocal-certified" iff every split certifies, else
/// "undetermined". For three-state sets an all-certified sweep also yields
/// strong nonlocality: any three locally indistinguishable orthogonal states
/// are locally irreducible, and that holds within each bipartition here.
struct NonlocalityReport {
    std::string set_name;
    std::size_t set_size = 0;
    std::vector<Certificate> certificates;
    std::string overall;
    bool strong_nonlocality = false;
};

NonlocalityReport certify_all(const StateSet &set);

/// True iff the pair is exactly (|0^N> + |1^N>)/sqrt(2), (|0^N> - |1^N>)/sqrt(2)
/// in either order.
bool is_ghz_pair(const StateVector &a, const StateVector &b);

}  // namespace nlw

#endif
