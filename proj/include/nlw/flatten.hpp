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

#ifndef NLW_FLATTEN_HPP
#define NLW_FLATTEN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/matrix.hpp"
#include "nlw/state.hpp"

namespace nlw {

/// A state viewed across one bipartition: coeff(r, c) is the amplitude of the
/// basis state whose left-side digits (ascending party order, mixed-radix
/// big-endian) index r and right-side digits index c. Frobenius norm is 1 and
/// inner products match the original states'.
struct FlattenedState {
    BipartiteShape shape;
    ComplexMatrix coeff;
};

FlattenedState flatten(const StateVector &s, const Bipartition &b);

/// Row/column position of one full basis index under a bipartition.
std::pair<std::uint64_t, std::uint64_t> split_index(std::uint64_t index,
                                                    const std::vector<std::uint32_t> &dims,
                                                    const Bipartition &b);

/// The four binary basis strings spanning the embedded 2x2 block of a
/// bipartition: all-zeros, (0 on S, 1 on S~), (1 on S, 0 on S~), all-ones.
/// When every local dimension is 2, flatten places them at matrix corners
/// (0,0), (0,n-1), (m-1,0), (m-1,n-1).
struct CornerSubspace {
    std::array<std::string, 4> strings;
};

CornerSubspace corner_subspace(const Bipartition &b);

struct EntanglementReport {
    bool genuinely_entangled = false;
    /// Schmidt rank of the state across each canonical bipartition, in
    /// enumeration order: singular values of the flattening above 1e-8.
    std::vector<std::pair<Bipartition, std::uint32_t>> ranks;
};

EntanglementReport entanglement_ranks(const StateVector &s);

}  // namespace nlw

#endif
