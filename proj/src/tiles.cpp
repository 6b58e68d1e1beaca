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

#include "nlw/tiles.hpp"

#include <algorithm>
#include <complex>
#include <sstream>

#include "nlw/flatten.hpp"

namespace nlw {

namespace {

constexpr double kSupportThreshold = 1e-12;

std::vector<std::string> side_labels(const StateSet &set, const Bipartition &b, bool left) {
    const auto &dims = set.local_dims();
    std::vector<std::uint32_t> side_dims;
    for (std::uint32_t p = 1; p <= b.n_parties(); ++p) {
        if (b.on_left(p) == left) side_dims.push_back(dims[p - 1]);
    }
    std::uint64_t n = space_dim(side_dims);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) labels.push_back(string_of_index(i, side_dims));
    return labels;
}

std::string cell_text(const std::vector<std::size_t> &members) {
    if (members.empty()) return ".";
    std::string text;
    for (std::size_t idx : members) text += std::to_string(idx);
    return text;
}

}  // namespace

TileDiagram tile_diagram(const StateSet &set, const Bipartition &b) {
    TileDiagram d{b, side_labels(set, b, true), side_labels(set, b, false), {}, {}};
    d.cells.assign(d.row_labels.size(),
                   std::vector<std::vector<std::size_t>>(d.col_labels.size()));
    for (std::size_t k = 0; k < set.size(); ++k) {
        FlattenedState f = flatten(set[k], b);
        for (std::size_t r = 0; r < f.shape.left_dim; ++r) {
            for (std::size_t c = 0; c < f.shape.right_dim; ++c) {
                if (std::abs(f.coeff(r, c)) > kSupportThreshold) {
                    d.cells[r][c].push_back(k + 1);
                }
            }
        }
        d.shading.push_back(k < 2 ? "dark" : "grey");
    }
    return d;
}

std::string render_ascii(const TileDiagram &d) {
    std::size_t label_w = 0;
    for (const auto &r : d.row_labels) label_w = std::max(label_w, r.size());
    std::size_t cell_w = 0;
    for (const auto &c : d.col_labels) cell_w = std::max(cell_w, c.size());
    for (const auto &row : d.cells) {
        for (const auto &cell : row) cell_w = std::max(cell_w, cell_text(cell).size());
    }

    auto pad = [](const std::string &s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };

    std::ostringstream out;
    out << "# tiles " << d.split.text() << "\n";
    out << std::string(label_w, ' ') << " |";
    for (const auto &c : d.col_labels) out << ' ' << pad(c, cell_w);
    out << "\n";
    out << std::string(label_w + 1, '-') << '+'
        << std::string(d.col_labels.size() * (cell_w + 1), '-') << "\n";
    for (std::size_t r = 0; r < d.row_labels.size(); ++r) {
        out << pad(d.row_labels[r], label_w) << " |";
        for (std::size_t c = 0; c < d.col_labels.size(); ++c) {
            out << ' ' << pad(cell_text(d.cells[r][c]), cell_w);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_svg(const TileDiagram &d) {
    constexpr int cell = 48;
    constexpr int margin = 56;
    std::size_t rows = d.row_labels.size();
    std::size_t cols = d.col_labels.size();
    int width = margin + static_cast<int>(cols) * cell + 8;
    int height = margin + static_cast<int>(rows) * cell + 8;

    auto fill_for = [&](const std::vector<std::size_t> &members) -> std::string {
        if (members.empty()) return "#ffffff";
        bool dark = false;
        bool grey = false;
        for (std::size_t idx : members) {
            if (d.shading[idx - 1] == "dark") {
                dark = true;
            } else {
                grey = true;
            }
        }
        if (dark && grey) return "#8f8f8f";
        return dark ? "#4a4a4a" : "#c9c9c9";
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
    out << "  <text x=\"4\" y=\"16\">" << d.split.text() << "</text>\n";
    for (std::size_t c = 0; c < cols; ++c) {
        out << "  <text x=\"" << margin + static_cast<int>(c) * cell + cell / 2
            << "\" y=\"" << margin - 8 << "\" text-anchor=\"middle\">" << d.col_labels[c]
            << "</text>\n";
    }
    for (std::size_t r = 0; r < rows; ++r) {
        out << "  <text x=\"" << margin - 8 << "\" y=\""
            << margin + static_cast<int>(r) * cell + cell / 2 + 4
            << "\" text-anchor=\"end\">" << d.row_labels[r] << "</text>\n";
        for (std::size_t c = 0; c < cols; ++c) {
            const auto &members = d.cells[r][c];
            int x = margin + static_cast<int>(c) * cell;
            int y = margin + static_cast<int>(r) * cell;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill_for(members)
                << "\" stroke=\"#222222\"/>\n";
            if (!members.empty()) {
                std::string text = cell_text(members);
                bool on_dark = fill_for(members) == "#4a4a4a";
                out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
                    << "\" text-anchor=\"middle\" fill=\""
                    << (on_dark ? "#ffffff" : "#000000") << "\">" << text << "</text>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace nlw
