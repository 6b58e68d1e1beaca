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

#include "nlw/flatten.hpp"

#include <cmath>
#include <stdexcept>

#include "nlw/qcore.hpp"

namespace nlw {

namespace {

BipartiteShape shape_of(const std::vector<std::uint32_t> &dims, const Bipartition &b) {
    if (dims.size() != b.n_parties())
        throw std::invalid_argument("bipartition party count does not match the state");
    std::uint64_t m = 1, n = 1;
    for (std::uint32_t p = 1; p <= b.n_parties(); ++p) {
        (b.on_left(p) ? m : n) *= dims[p - 1];
    }
    return BipartiteShape{static_cast<std::size_t>(m), static_cast<std::size_t>(n)};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> split_index(std::uint64_t index,
                                                    const std::vector<std::uint32_t> &dims,
                                                    const Bipartition &b) {
    if (dims.size() != b.n_parties())
        throw std::invalid_argument("bipartition party count does not match the state");
    std::vector<std::uint32_t> digit(dims.size());
    for (std::size_t p = dims.size(); p-- > 0;) {
        digit[p] = static_cast<std::uint32_t>(index % dims[p]);
        index /= dims[p];
    }
    if (index != 0) throw std::invalid_argument("basis index out of range");
    std::uint64_t row = 0, col = 0;
    for (std::uint32_t p = 1; p <= b.n_parties(); ++p) {
        if (b.on_left(p))
            row = row * dims[p - 1] + digit[p - 1];
        else
            col = col * dims[p - 1] + digit[p - 1];
    }
    return {row, col};
}

FlattenedState flatten(const StateVector &s, const Bipartition &b) {
    const BipartiteShape shape = shape_of(s.local_dims(), b);
    ComplexMatrix coeff(shape.left_dim, shape.right_dim);
    for (const auto &t : s.terms()) {
        const auto [row, col] = split_index(t.index, s.local_dims(), b);
        coeff(row, col) = t.amp;
    }
    return FlattenedState{shape, std::move(coeff)};
}

CornerSubspace corner_subspace(const Bipartition &b) {
    const std::uint32_t n = b.n_parties();
    std::array<std::string, 4> strings;
    strings[0].assign(n, '0');
    strings[3].assign(n, '1');
    strings[1] = strings[0];
    strings[2] = strings[0];
    for (std::uint32_t p = 1; p <= n; ++p) {
        (b.on_left(p) ? strings[2] : strings[1])[p - 1] = '1';
    }
    return CornerSubspace{strings};
}

EntanglementReport entanglement_ranks(const StateVector &s) {
    EntanglementReport report;
    report.genuinely_entangled = true;
    for (const auto &b : enumerate_bipartitions(s.num_parties())) {
        const FlattenedState f = flatten(s, b);
        const ComplexMatrix &c = f.coeff;
        ComplexMatrix gram = c.rows() <= c.cols() ? c * c.adjoint() : c.adjoint() * c;
        const EigDecomposition eig = hermitian_eig(gram);
        std::uint32_t rank = 0;
        for (double lam : eig.eigenvalues) {
            if (lam > 0 && std::sqrt(lam) > 1e-8) ++rank;
        }
        report.ranks.emplace_back(b, rank);
        if (rank < 2) report.genuinely_entangled = false;
    }
    return report;
}

}  // namespace nlw
