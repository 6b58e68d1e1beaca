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

#ifndef NLW_REPORT_HPP
#define NLW_REPORT_HPP

#include "json.hpp"
#include "nlw/sdp.hpp"
#include "nlw/state.hpp"

namespace nlw {

struct ReportOptions {
    bool full = false;       // add per-split solver runs and measurement analysis
    bool exact_oplm = false; // integer-elimination dimensions (exact sets only)
    unsigned jobs = 1;
    SdpOptions sdp;
};

/// Aggregates everything known about a three-state set into one document
/// ("schema": "1"): orthogonality, per-state genuine entanglement, the
/// certificate sweep, the strong-nonlocality verdict with its reasoning
/// chain, and (with `full`) a solver report plus local-measurement analysis
/// per bipartition. Bipartitions appear in enumeration order regardless of
/// how the per-split work was scheduled.
nlohmann::json full_report(const StateSet &set, const ReportOptions &opts = {});

}  // namespace nlw

#endif
