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

#include "nlw/report.hpp"

#include <utility>
#include <vector>

#include "nlw/flatten.hpp"
#include "nlw/io.hpp"
#include "nlw/oplm.hpp"
#include "nlw/util.hpp"
#include "nlw/witness.hpp"

namespace nlw {

nlohmann::json full_report(const StateSet &set, const ReportOptions &opts) {
    NonlocalityReport sweep = certify_all(set);
    StrongNonlocalityVerdict verdict = strong_nonlocality_verdict(sweep);

    nlohmann::json doc;
    doc["schema"] = "1";
    doc["set"] = set.name();
    doc["num_parties"] = set.num_parties();
    doc["num_states"] = set.size();
    doc["orthogonal"] = true;  // enforced when the set was constructed

    nlohmann::json entangled = nlohmann::json::array();
    for (const auto &s : set.states()) {
        entangled.push_back(entanglement_ranks(s).genuinely_entangled);
    }
    doc["genuinely_entangled"] = std::move(entangled);

    std::vector<nlohmann::json> parts(sweep.certificates.size());
    parallel_for(parts.size(), opts.jobs, [&](std::size_t i) {
        const Certificate &c = sweep.certificates[i];
        nlohmann::json entry = certificate_to_json(c);
        if (opts.full) {
            entry["sdp"] = sdp_report_to_json(
                ppt_value(make_instance(set, c.split), opts.sdp));
            entry["oplm"] = toplm_to_json(
                toplm_verdict(set, c.split, opts.exact_oplm));
        }
        parts[i] = std::move(entry);
    });
    doc["bipartitions"] = std::move(parts);

    doc["overall"] = sweep.overall;
    doc["strong_nonlocality"] = verdict.strongly_nonlocal;
    doc["provenance"] = verdict.provenance;
    return doc;
}

}  // namespace nlw
