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

#include "nlw/bipartition.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace nlw {

Bipartition::Bipartition(std::uint32_t n_parties, std::uint64_t left_mask) {
    if (n_parties < 2 || n_parties > 63)
        throw std::invalid_argument("bipartitions need 2 to 63 parties");
    const std::uint64_t full = (std::uint64_t(1) << n_parties) - 1;
    if (left_mask == 0 || left_mask == full)
        throw std::invalid_argument("bipartition sides must both be nonempty");
    if (left_mask > full) throw std::invalid_argument("bipartition mask names a missing party");
    if (!(left_mask & 1)) left_mask = full & ~left_mask;
    n_parties_ = n_parties;
    mask_ = left_mask;
}

bool Bipartition::on_left(std::uint32_t party) const {
    if (party < 1 || party > n_parties_) throw std::invalid_argument("party out of range");
    return mask_ >> (party - 1) & 1;
}

std::uint32_t Bipartition::left_size() const {
    return static_cast<std::uint32_t>(std::popcount(mask_));
}

std::vector<std::uint32_t> Bipartition::left_parties() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 1; p <= n_parties_; ++p) {
        if (on_left(p)) out.push_back(p);
    }
    return out;
}

std::vector<std::uint32_t> Bipartition::right_parties() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 1; p <= n_parties_; ++p) {
        if (!on_left(p)) out.push_back(p);
    }
    return out;
}

std::string Bipartition::text() const {
    std::string out;
    auto append = [&out](const std::vector<std::uint32_t> &parties) {
        for (std::size_t i = 0; i < parties.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parties[i]);
        }
    };
    append(left_parties());
    out += '|';
    append(right_parties());
    return out;
}

namespace {

std::uint64_t parse_party_list(const std::string &text, std::size_t begin, std::size_t end,
                               std::uint32_t n_parties) {
    std::uint64_t mask = 0;
    std::size_t pos = begin;
    while (pos < end) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos || comma > end) comma = end;
        unsigned party = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, party);
        if (ec != std::errc() || ptr != text.data() + comma || party < 1 || party > n_parties)
            throw std::invalid_argument("bad party in bipartition '" + text + "'");
        const std::uint64_t bit = std::uint64_t(1) << (party - 1);
        if (mask & bit) throw std::invalid_argument("party repeats in bipartition '" + text + "'");
        mask |= bit;
        pos = comma + 1;
    }
    return mask;
}

}  // namespace

Bipartition Bipartition::parse(const std::string &text, std::uint32_t n_parties) {
    if (n_parties < 2 || n_parties > 63)
        throw std::invalid_argument("bipartitions need 2 to 63 parties");
    const std::size_t bar = text.find('|');
    if (bar == std::string::npos) {
        std::uint64_t mask = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), mask);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw std::invalid_argument("bipartition '" + text + "' is neither a list nor a mask");
        return Bipartition(n_parties, mask);
    }
    const std::uint64_t left = parse_party_list(text, 0, bar, n_parties);
    const std::uint64_t right = parse_party_list(text, bar + 1, text.size(), n_parties);
    const std::uint64_t full = (std::uint64_t(1) << n_parties) - 1;
    if ((left | right) != full || (left & right) != 0)
        throw std::invalid_argument("bipartition '" + text + "' does not partition the parties");
    return Bipartition(n_parties, left);
}

std::vector<Bipartition> enumerate_bipartitions(std::uint32_t n_parties) {
    if (n_parties < 2 || n_parties > 63)
        throw std::invalid_argument("bipartitions need 2 to 63 parties");
    std::vector<Bipartition> out;
    const std::uint64_t full = (std::uint64_t(1) << n_parties) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) out.emplace_back(n_parties, mask);
    return out;
}

Bipartition pair_to_bipartition(const std::string &bits) {
    const std::uint32_t n = static_cast<std::uint32_t>(bits.size());
    std::uint64_t zeros = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
        if (bits[p] == '0')
            zeros |= std::uint64_t(1) << p;
        else if (bits[p] != '1')
            throw std::invalid_argument("bit string '" + bits + "' has a non-binary digit");
    }
    const std::uint64_t full = n >= 64 ? 0 : (std::uint64_t(1) << n) - 1;
    if (zeros == 0 || zeros == full)
        throw std::invalid_argument("constant bit string '" + bits + "' names no bipartition");
    return Bipartition(n, zeros);
}

}  // namespace nlw
