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

#ifndef NLW_TILES_HPP
#define NLW_TILES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/state.hpp"

namespace nlw {

/// Support grid of a state set flattened across one bipartition. Rows are the
/// S-side digit strings in ascending order, columns the complement side, so
/// the grid matches the flattened coefficient matrices entry for entry.
struct TileDiagram {
    Bipartition split;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    /// cells[r][c] lists the 1-based indices of the states whose flattened
    /// coefficient at (r, c) has magnitude > 1e-12, ascending.
    std::vector<std::vector<std::vector<std::size_t>>> cells;
    /// shading[k] for state k+1: "dark" for the leading pair, "grey" after.
    std::vector<std::string> shading;
};

TileDiagram tile_diagram(const StateSet &set, const Bipartition &b);

/// Fixed-width grid, byte-stable for golden tests. Cells print the
/// concatenated state indices ("12") or "." when empty.
std::string render_ascii(const TileDiagram &d);

/// Presentation-only SVG; dark/grey fills follow the shading classes.
std::string render_svg(const TileDiagram &d);

}  // namespace nlw

#endif
