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

#pragma once

#include <string>

#include "json.hpp"
#include "nlw/oplm.hpp"
#include "nlw/sdp.hpp"
#include "nlw/state.hpp"
#include "nlw/witness.hpp"

namespace nlw {

/// State-set document layout:
///
///   {
///     "name": "...",
///     "num_parties": 3,
///     "local_dims": [2, 2, 2],
///     "states": [
///       { "name": "...",
///         "terms": [ { "bits": "001", "num_re": 1, "num_im": 0 }, ... ],
///         "norm_sq": 6 },
///       ...
///     ]
///   }
///
/// Exact states carry Gaussian-integer numerators plus the shared squared
/// norm; a floating state instead stores each term as
/// { "bits": "...", "amp": [re, im] }. The loader re-validates everything
/// the in-memory constructors enforce (normalization, string lengths,
/// digit ranges, pairwise orthogonality) and additionally rejects a
/// declared "norm_sq" that disagrees with the stored numerators.
nlohmann::json stateset_to_json(const StateSet &set);
StateSet stateset_from_json(const nlohmann::json &doc);

StateSet load_stateset(const std::string &path);
void save_stateset(const StateSet &set, const std::string &path);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// Serialized as { "split", "bell_pair_ok", "overlap_sq", "verdict" } with
/// "overlap_sq" a "p/q" string when the overlap was computed exactly and a
/// 12-significant-digit float otherwise.
nlohmann::json certificate_to_json(const Certificate &c);

/// Serialized as { "set", "bipartitions": [...], "overall",
/// "strong_nonlocality" }.
nlohmann::json nonlocality_report_to_json(const NonlocalityReport &r);

/// Serialized as { "primal", "dual_bound", "iters",
/// "residuals": { "primal", "dual" }, "status", "perfect" }.
nlohmann::json sdp_report_to_json(const SdpReport &r);

/// Serialized as { "split", "left_dim", "right_dim", "trivial_left",
/// "trivial_right" }.
nlohmann::json toplm_to_json(const ToplmVerdict &v);

}  // namespace nlw
