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

#ifndef NLW_GENERATORS_HPP
#define NLW_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/state.hpp"

namespace nlw {

/// (|0^N> + |1^N>)/sqrt(2) and (|0^N> - |1^N>)/sqrt(2), exact backend.
StateVector ghz_plus(std::uint32_t n_parties);
StateVector ghz_minus(std::uint32_t n_parties);

/// {(|00>+|11>)/sqrt(2), (|00>-|11>)/sqrt(2), (|01>+|10>)/sqrt(2)}.
StateSet bell_triple();

/// {(|00>+|11>)/sqrt(2), (|00>-|11>)/sqrt(2), |01>}.
StateSet ghosh_set();

/// The Bell triple on parties (l, r) tensored with |0> everywhere else.
/// Requires l on the left of `split` and r on the right.
StateSet lifted_bell_triple(std::uint32_t n_parties, std::uint32_t l, std::uint32_t r,
                            const Bipartition &split);

/// The GHZ pair plus (|0_S 1_S~> + |1_S 0_S~>)/sqrt(2).
StateSet corner_bell_triple(const Bipartition &split);

/// The GHZ pair plus the W state (n=3) or its seven-term four-party
/// counterpart (n=4).
StateSet ghz_w_set(std::uint32_t n_parties);

/// The GHZ pair plus the uniform superposition over every string other than
/// all-zeros and all-ones.
StateSet ghz_uniform_middle_set(std::uint32_t n_parties);

/// Thrown when middle-layer coefficients leave some string/bit-wise-reverse
/// pair with zero total weight.
struct pair_support_error : std::invalid_argument {
    explicit pair_support_error(std::vector<std::pair<std::string, std::string>> pairs);
    std::vector<std::pair<std::string, std::string>> violating;
};

/// The GHZ pair plus a middle-layer state with the given coefficients.
/// Throws pair_support_error when some reverse pair carries no weight.
StateSet ghz_weighted_middle_set(const MiddleCoeffs &coeffs);

}  // namespace nlw

#endif
