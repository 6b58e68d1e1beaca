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

#ifndef NLW_OPLM_HPP
#define NLW_OPLM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/matrix.hpp"
#include "nlw/qcore.hpp"
#include "nlw/state.hpp"
#include "nlw/witness.hpp"

namespace nlw {

/// Real-linear space of Hermitian operators H on one side of a bipartition
/// that keep the set pairwise orthogonal when applied locally:
/// <psi_i|(H (x) I)|psi_j> = 0 for all i != j. The identity always belongs, so
/// dimension >= 1; dimension exactly 1 means every orthogonality-preserving
/// local measurement on that side is trivial (proportional to the identity),
/// since any other solution H gives a nontrivial PSD element I + t H.
struct OplmSpace {
    Side side = Side::left;
    std::size_t side_dim = 0;           // operator dimension d on that side
    std::size_t dimension = 0;          // real dimension of the solution space
    std::vector<ComplexMatrix> basis;   // orthonormal Hermitian basis

    bool trivial() const { return dimension == 1; }
};

OplmSpace oplm_space(const StateSet &set, const Bipartition &b, Side side);

/// Same space for a single party against all others joined.
OplmSpace oplm_space_party(const StateSet &set, std::uint32_t party);

/// Nullspace dimension by fraction-free integer elimination over the exact
/// amplitude numerators; requires an all-exact set. Resolves any borderline
/// rank decision of the floating path.
std::size_t oplm_dimension_exact(const StateSet &set, const Bipartition &b, Side side);

struct ToplmVerdict {
    Bipartition split;
    std::size_t left_dim = 0;   // solution-space dimensions, not side sizes
    std::size_t right_dim = 0;
    bool trivial_left = false;
    bool trivial_right = false;
};

/// Runs oplm_space on both sides; both trivial is evidence of local
/// irreducibility across the split. `exact` recomputes the dimensions by
/// integer elimination (all-exact sets only).
ToplmVerdict toplm_verdict(const StateSet &set, const Bipartition &b, bool exact = false);

struct StrongNonlocalityVerdict {
    bool strongly_nonlocal = false;
    std::vector<std::string> provenance;
};

/// Combines a certificate sweep into a strong-nonlocality verdict for
/// three-state sets, recording the reasoning chain step by step.
StrongNonlocalityVerdict strong_nonlocality_verdict(const NonlocalityReport &report);

}  // namespace nlw

#endif
