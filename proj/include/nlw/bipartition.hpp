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

#ifndef NLW_BIPARTITION_HPP
#define NLW_BIPARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nlw {

/// A proper bipartition S|S~ of parties 1..N, stored as the bitmask of S
/// (bit p-1 set iff party p is on the left). Canonical form keeps party 1 on
/// the left, so each unordered split has exactly one representation; the
/// constructor flips the mask when needed.
class Bipartition {
  public:
    Bipartition(std::uint32_t n_parties, std::uint64_t left_mask);

    /// Accepts "1,2|3,4" (both sides must partition 1..N) or a mask literal.
    static Bipartition parse(const std::string &text, std::uint32_t n_parties);

    std::uint32_t n_parties() const { return n_parties_; }
    std::uint64_t left_mask() const { return mask_; }
    bool on_left(std::uint32_t party) const;  // party is 1-based
    std::uint32_t left_size() const;
    std::vector<std::uint32_t> left_parties() const;
    std::vector<std::uint32_t> right_parties() const;
    std::string text() const;  // "1,2|3,4"

    friend bool operator==(const Bipartition &a, const Bipartition &b) {
        return a.n_parties_ == b.n_parties_ && a.mask_ == b.mask_;
    }

  private:
    std::uint32_t n_parties_ = 0;
    std::uint64_t mask_ = 0;
};

/// All canonical bipartitions of N parties in ascending-mask order; there are
/// exactly 2^(N-1) - 1 of them.
std::vector<Bipartition> enumerate_bipartitions(std::uint32_t n_parties);

/// The split whose sides are the zero positions and one positions of a
/// non-constant bit string; a string and its bit-wise reverse map to the same
/// split, so the map over all such strings is 2-to-1.
Bipartition pair_to_bipartition(const std::string &bits);

}  // namespace nlw

#endif
