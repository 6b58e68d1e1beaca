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

#include "nlw/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "nlw/util.hpp"

namespace nlw {

namespace {

[[noreturn]] void fail(const std::string &msg) {
    throw std::invalid_argument("stateset: " + msg);
}

const nlohmann::json &field(const nlohmann::json &obj, const char *key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

std::int64_t int_field(const nlohmann::json &obj, const char *key) {
    const auto &v = field(obj, key);
    if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

StateVector state_from_json(const nlohmann::json &obj, std::uint32_t num_parties,
                            const std::vector<std::uint32_t> &dims) {
    if (!obj.is_object()) fail("each state must be an object");
    const auto &name = field(obj, "name");
    if (!name.is_string()) fail("state name must be a string");
    const auto &terms = field(obj, "terms");
    if (!terms.is_array() || terms.empty()) fail("state terms must be a non-empty array");

    bool exact = terms.front().contains("num_re") || terms.front().contains("num_im");
    if (exact) {
        std::vector<std::pair<std::string, GaussInt>> parsed;
        parsed.reserve(terms.size());
        for (const auto &t : terms) {
            if (t.contains("amp")) fail("state mixes exact and floating terms");
            const auto &bits = field(t, "bits");
            if (!bits.is_string()) fail("term bits must be a string");
            parsed.emplace_back(bits.get<std::string>(),
                                GaussInt{int_field(t, "num_re"), int_field(t, "num_im")});
        }
        auto state = StateVector::exact(name.get<std::string>(), num_parties, dims, parsed);
        if (int_field(obj, "norm_sq") != state.norm_sq()) {
            fail("state \"" + state.name() + "\" declares norm_sq " +
                 std::to_string(int_field(obj, "norm_sq")) + " but its numerators sum to " +
                 std::to_string(state.norm_sq()));
        }
        return state;
    }

    std::vector<std::pair<std::string, cplx>> parsed;
    parsed.reserve(terms.size());
    for (const auto &t : terms) {
        if (t.contains("num_re") || t.contains("num_im")) {
            fail("state mixes exact and floating terms");
        }
        const auto &bits = field(t, "bits");
        if (!bits.is_string()) fail("term bits must be a string");
        const auto &amp = field(t, "amp");
        if (!amp.is_array() || amp.size() != 2 || !amp[0].is_number() || !amp[1].is_number()) {
            fail("term amp must be [re, im]");
        }
        parsed.emplace_back(bits.get<std::string>(),
                            cplx(amp[0].get<double>(), amp[1].get<double>()));
    }
    return StateVector::floating(name.get<std::string>(), num_parties, dims, parsed);
}

nlohmann::json state_to_json(const StateVector &s) {
    nlohmann::json obj;
    obj["name"] = s.name();
    nlohmann::json terms = nlohmann::json::array();
    if (s.backend() == Backend::exact) {
        for (const auto &t : s.exact_terms()) {
            terms.push_back({{"bits", s.basis_string(t.index)},
                             {"num_re", t.coeff.re},
                             {"num_im", t.coeff.im}});
        }
        obj["terms"] = std::move(terms);
        obj["norm_sq"] = s.norm_sq();
    } else {
        for (const auto &t : s.terms()) {
            terms.push_back({{"bits", s.basis_string(t.index)},
                             {"amp", {t.amp.real(), t.amp.imag()}}});
        }
        obj["terms"] = std::move(terms);
    }
    return obj;
}

}  // namespace

nlohmann::json stateset_to_json(const StateSet &set) {
    nlohmann::json doc;
    doc["name"] = set.name();
    doc["num_parties"] = set.num_parties();
    doc["local_dims"] = set.local_dims();
    nlohmann::json states = nlohmann::json::array();
    for (const auto &s : set.states()) states.push_back(state_to_json(s));
    doc["states"] = std::move(states);
    return doc;
}

StateSet stateset_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) fail("document must be an object");
    std::string name = doc.contains("name") ? field(doc, "name").get<std::string>() : "set";
    std::int64_t parties = int_field(doc, "num_parties");
    if (parties < 1 || parties > 63) fail("num_parties out of range");
    const auto &dims_json = field(doc, "local_dims");
    if (!dims_json.is_array() || dims_json.size() != static_cast<std::size_t>(parties)) {
        fail("local_dims must list one dimension per party");
    }
    std::vector<std::uint32_t> dims;
    dims.reserve(dims_json.size());
    for (const auto &d : dims_json) {
        if (!d.is_number_integer() || d.get<std::int64_t>() < 2 ||
            d.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
            fail("local_dims entries must be integers >= 2");
        }
        dims.push_back(d.get<std::uint32_t>());
    }
    const auto &states_json = field(doc, "states");
    if (!states_json.is_array() || states_json.empty()) fail("states must be a non-empty array");
    std::vector<StateVector> states;
    states.reserve(states_json.size());
    for (const auto &s : states_json) {
        states.push_back(state_from_json(s, static_cast<std::uint32_t>(parties), dims));
    }
    return StateSet::checked(std::move(name), std::move(states));
}

StateSet load_stateset(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("stateset: " + path + " is not valid JSON: " + e.what());
    }
    return stateset_from_json(doc);
}

void save_stateset(const StateSet &set, const std::string &path) {
    write_text_file(path, stateset_to_json(set).dump(2) + "\n");
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::json certificate_to_json(const Certificate &c) {
    nlohmann::json obj;
    obj["split"] = c.split.text();
    obj["bell_pair_ok"] = c.bell_pair_ok;
    if (c.overlap_sq.exact) {
        obj["overlap_sq"] = c.overlap_sq.exact->str();
    } else {
        obj["overlap_sq"] = round_sig(c.overlap_sq.value);
    }
    obj["verdict"] = c.verdict;
    return obj;
}

nlohmann::json nonlocality_report_to_json(const NonlocalityReport &r) {
    nlohmann::json obj;
    obj["set"] = r.set_name;
    nlohmann::json parts = nlohmann::json::array();
    for (const auto &c : r.certificates) parts.push_back(certificate_to_json(c));
    obj["bipartitions"] = std::move(parts);
    obj["overall"] = r.overall;
    obj["strong_nonlocality"] = r.strong_nonlocality;
    return obj;
}

nlohmann::json sdp_report_to_json(const SdpReport &r) {
    nlohmann::json obj;
    obj["primal"] = round_sig(r.primal_value);
    obj["dual_bound"] = round_sig(r.dual_bound);
    obj["iters"] = r.iterations;
    obj["residuals"] = {{"primal", round_sig(r.primal_residual)},
                        {"dual", round_sig(r.dual_residual)}};
    obj["status"] = r.status;
    obj["perfect"] = r.perfect;
    return obj;
}

nlohmann::json toplm_to_json(const ToplmVerdict &v) {
    nlohmann::json obj;
    obj["split"] = v.split.text();
    obj["left_dim"] = v.left_dim;
    obj["right_dim"] = v.right_dim;
    obj["trivial_left"] = v.trivial_left;
    obj["trivial_right"] = v.trivial_right;
    return obj;
}

}  // namespace nlw
