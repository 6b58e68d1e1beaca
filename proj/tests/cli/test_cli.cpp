// Copyright 2026 The nlw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_shell(const std::string &cmd) {
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int raw = pclose(pipe);
    CliResult res;
    res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    res.output = std::move(out);
    return res;
}

CliResult run_cli(const std::string &args, const std::string &env = "") {
    std::string cmd;
    if (!env.empty()) cmd = env + " ";
    cmd += std::string(NLW_CLI_PATH) + " " + args + " 2>&1";
    return run_shell(cmd);
}

std::string tmp_file(const std::string &name) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "nlw_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
}

bool type_matches(const json &doc, const std::string &t) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "integer") return doc.is_number_integer();
    if (t == "number") return doc.is_number();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    return false;
}

void collect_errors(const json &schema, const json &doc, const std::string &path,
                    std::vector<std::string> &errs) {
    if (schema.contains("type")) {
        const json &t = schema.at("type");
        bool ok = false;
        if (t.is_array()) {
            for (const auto &x : t) ok = ok || type_matches(doc, x.get<std::string>());
        } else {
            ok = type_matches(doc, t.get<std::string>());
        }
        if (!ok) {
            errs.push_back(path + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto &x : schema.at("enum")) ok = ok || (doc == x);
        if (!ok) errs.push_back(path + ": value not allowed");
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto &k : schema.at("required"))
                if (!doc.contains(k.get<std::string>()))
                    errs.push_back(path + ": missing " + k.get<std::string>());
        const json props = schema.value("properties", json::object());
        if (schema.contains("additionalProperties") &&
            schema.at("additionalProperties") == json(false))
            for (const auto &item : doc.items())
                if (!props.contains(item.key()))
                    errs.push_back(path + ": unexpected key " + item.key());
        for (const auto &item : props.items())
            if (doc.contains(item.key()))
                collect_errors(item.value(), doc.at(item.key()), path + "/" + item.key(), errs);
    }
    if (doc.is_array()) {
        if (schema.contains("minItems") && doc.size() < schema.at("minItems").get<std::size_t>())
            errs.push_back(path + ": too few items");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < doc.size(); ++i)
                collect_errors(schema.at("items"), doc[i], path + "/" + std::to_string(i), errs);
    }
}

void check_schema(const std::string &schema_name, const json &doc) {
    const json schema = json::parse(read_file(std::string(NLW_SCHEMA_DIR) + "/" + schema_name));
    std::vector<std::string> errs;
    collect_errors(schema, doc, "#", errs);
    for (const auto &e : errs) FAIL_CHECK(schema_name << " " << e);
    CHECK(errs.empty());
}

const char *kColumnsSet = R"({
 "name": "columns",
 "num_parties": 2,
 "local_dims": [2, 2],
 "states": [
  {"name": "k00", "norm_sq": 1, "terms": [{"bits": "00", "num_re": 1, "num_im": 0}]},
  {"name": "k01", "norm_sq": 1, "terms": [{"bits": "01", "num_re": 1, "num_im": 0}]}
 ]
})";

}  // namespace

TEST_CASE("gen emits schema-conforming state sets") {
    const std::vector<std::string> invocations = {
        "gen bell",
        "gen ghosh",
        "gen example1 --n 3",
        "gen example2 --n 4",
        "gen theorem1 --n 5",
        "gen theorem2 --n 3 --coeffs 001,010,011",
        "gen eq2 --n 3 --l 1 --r 2 --split '1|2,3'",
        "gen eq3 --n 3 --split '1|2,3'",
    };
    for (const auto &args : invocations) {
        CAPTURE(args);
        const CliResult res = run_cli(args + " -o " + tmp_file("gen_probe.json"));
        CHECK(res.exit_code == 0);
        const json doc = json::parse(read_file(tmp_file("gen_probe.json")));
        check_schema("stateset.schema.json", doc);
        CHECK(doc.at("states").size() == 3);
    }
}

TEST_CASE("gen theorem2 rejects unsupported reverse pairs") {
    const CliResult bad = run_cli("gen theorem2 --n 3 --coeffs 001");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("reverse pairs unsupported") != std::string::npos);
    CHECK(bad.output.find("{010,101}") != std::string::npos);
    CHECK(bad.output.find("{011,100}") != std::string::npos);

    const CliResult good = run_cli("gen theorem2 --n 3 --coeffs 001,010,011");
    CHECK(good.exit_code == 0);
}

TEST_CASE("check validates documents") {
    const std::string file = tmp_file("check_ghosh.json");
    REQUIRE(run_cli("gen ghosh -o " + file).exit_code == 0);

    const CliResult res = run_cli("check -i " + file);
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    check_schema("check.schema.json", doc);
    CHECK(doc.at("valid") == true);
    CHECK(doc.at("orthogonal") == true);
    CHECK(doc.at("backend") == "exact");
    CHECK(doc.at("num_states") == 3);

    const std::string broken = tmp_file("check_broken.json");
    write_file(broken, "{ not json");
    CHECK(run_cli("check -i " + broken).exit_code == 2);
}

TEST_CASE("certify sweeps every bipartition") {
    const std::string t1n6 = tmp_file("certify_t1n6.json");
    REQUIRE(run_cli("gen theorem1 --n 6 -o " + t1n6).exit_code == 0);
    const CliResult res = run_cli("certify -i " + t1n6);
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    check_schema("nonlocality.schema.json", doc);
    REQUIRE(doc.at("bipartitions").size() == 31);
    for (const auto &entry : doc.at("bipartitions")) {
        check_schema("certificate.schema.json", entry);
        CHECK(entry.at("verdict") == "certified-PPT-indistinguishable");
    }
    CHECK(doc.at("overall") == "genuinely-nonlocal-certified");
    CHECK(doc.at("strong_nonlocality") == true);

    const std::string eq2 = tmp_file("certify_eq2.json");
    REQUIRE(run_cli("gen eq2 --n 3 --l 1 --r 2 --split '1|2,3' -o " + eq2).exit_code == 0);
    const CliResult lifted = run_cli("certify -i " + eq2);
    CHECK(lifted.exit_code == 1);
    const json ldoc = json::parse(lifted.output);
    check_schema("nonlocality.schema.json", ldoc);
    CHECK(ldoc.at("overall") == "undetermined");
    bool saw_inapplicable = false;
    for (const auto &entry : ldoc.at("bipartitions"))
        if (entry.at("verdict").get<std::string>().rfind("inapplicable", 0) == 0)
            saw_inapplicable = true;
    CHECK(saw_inapplicable);

    const std::string two = tmp_file("certify_two.json");
    write_file(two, kColumnsSet);
    const CliResult rejected = run_cli("certify -i " + two);
    CHECK(rejected.exit_code == 2);
    CHECK(rejected.output.find("three states") != std::string::npos);
}

TEST_CASE("sdp reports certified values and honors subset flags") {
    const std::string file = tmp_file("sdp_ghosh.json");
    REQUIRE(run_cli("gen ghosh -o " + file).exit_code == 0);

    const CliResult res = run_cli("sdp -i " + file);
    CHECK(res.exit_code == 0);
    const json doc = json::parse(res.output);
    check_schema("sdp.schema.json", doc);
    CHECK(doc.at("status") == "converged");
    CHECK(doc.at("primal").get<double>() <= 0.999);
    CHECK(doc.at("dual_bound").get<double>() < 1.0);
    CHECK(doc.at("perfect") == false);

    const CliResult pair = run_cli("sdp -i " + file + " --subset 1,2");
    CHECK(pair.exit_code == 0);
    const json pdoc = json::parse(pair.output);
    CHECK(std::abs(pdoc.at("primal").get<double>() - 1.0) <= 1e-6);
    CHECK(pdoc.at("perfect") == true);

    CHECK(run_cli("sdp -i " + file + " --subset 1,2 --expect-indistinguishable").exit_code == 1);
    CHECK(run_cli("sdp -i " + file + " --expect-indistinguishable").exit_code == 0);
}

TEST_CASE("oplm reports solution-space dimensions") {
    const std::string bell = tmp_file("oplm_bell.json");
    REQUIRE(run_cli("gen bell -o " + bell).exit_code == 0);
    const CliResult trivial = run_cli("oplm -i " + bell + " --split '1|2'");
    CHECK(trivial.exit_code == 0);
    const json tdoc = json::parse(trivial.output);
    check_schema("oplm.schema.json", tdoc);
    CHECK(tdoc.at("trivial_left") == true);
    CHECK(tdoc.at("trivial_right") == true);
    CHECK(tdoc.at("left_dim") == 1);
    CHECK(tdoc.at("right_dim") == 1);

    const std::string columns = tmp_file("oplm_columns.json");
    write_file(columns, kColumnsSet);
    const CliResult open = run_cli("oplm -i " + columns + " --split '1|2'");
    CHECK(open.exit_code == 1);
    const json odoc = json::parse(open.output);
    check_schema("oplm.schema.json", odoc);
    CHECK(odoc.at("left_dim") == 4);
    CHECK(odoc.at("trivial_left") == false);
}

TEST_CASE("tiles reproduce the golden diagrams") {
    struct Golden {
        std::string gen_args;
        std::string split;
        std::string golden;
    };
    const std::vector<Golden> table = {
        {"gen bell", "1|2", "fig1a.txt"},
        {"gen ghosh", "1|2", "fig1b.txt"},
        {"gen example1 --n 3", "1,2|3", "fig2a.txt"},
        {"gen example1 --n 4", "1,2|3,4", "fig2b.txt"},
        {"gen example2 --n 3", "1,2|3", "fig3a.txt"},
        {"gen example2 --n 4", "1,2|3,4", "fig3b.txt"},
    };
    for (const auto &row : table) {
        CAPTURE(row.golden);
        const std::string file = tmp_file("tiles_input.json");
        REQUIRE(run_cli(row.gen_args + " -o " + file).exit_code == 0);
        const CliResult res = run_cli("tiles -i " + file + " --split '" + row.split + "'");
        CHECK(res.exit_code == 0);
        CHECK(res.output == read_file(std::string(NLW_GOLDEN_DIR) + "/" + row.golden));
    }

    const std::string bell = tmp_file("tiles_input.json");
    REQUIRE(run_cli("gen bell -o " + bell).exit_code == 0);
    const CliResult svg = run_cli("tiles -i " + bell + " --split '1|2' --format svg");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.rfind("<svg", 0) == 0);
}

TEST_CASE("report assembles lean and full documents") {
    const std::string t1n4 = tmp_file("report_t1n4.json");
    REQUIRE(run_cli("gen theorem1 --n 4 -o " + t1n4).exit_code == 0);
    const CliResult lean = run_cli("report -i " + t1n4);
    CHECK(lean.exit_code == 0);
    const json ldoc = json::parse(lean.output);
    check_schema("report.schema.json", ldoc);
    CHECK(ldoc.at("strong_nonlocality") == true);
    CHECK(ldoc.at("bipartitions").size() == 7);
    for (const auto &flag : ldoc.at("genuinely_entangled")) CHECK(flag == true);
    CHECK(!ldoc.at("bipartitions")[0].contains("sdp"));
    CHECK(!ldoc.at("bipartitions")[0].contains("oplm"));

    const std::string ghosh = tmp_file("report_ghosh.json");
    REQUIRE(run_cli("gen ghosh -o " + ghosh).exit_code == 0);
    const CliResult full = run_cli("report -i " + ghosh + " --full --exact");
    CHECK(full.exit_code == 0);
    const json fdoc = json::parse(full.output);
    check_schema("report.schema.json", fdoc);
    REQUIRE(fdoc.at("bipartitions").size() == 1);
    const json &entry = fdoc.at("bipartitions")[0];
    REQUIRE(entry.contains("sdp"));
    REQUIRE(entry.contains("oplm"));
    CHECK(entry.at("sdp").at("primal").get<double>() <= 0.999);
    CHECK(entry.at("sdp").at("dual_bound").get<double>() < 1.0);

    const std::string eq3 = tmp_file("report_eq3.json");
    REQUIRE(run_cli("gen eq3 --n 3 --split '1|2,3' -o " + eq3).exit_code == 0);
    const CliResult open = run_cli("report -i " + eq3);
    CHECK(open.exit_code == 1);
    const json odoc = json::parse(open.output);
    check_schema("report.schema.json", odoc);
    CHECK(odoc.at("overall") == "undetermined");
    CHECK(odoc.at("strong_nonlocality") == false);
}

TEST_CASE("dimension cap comes from the environment") {
    const std::string small = tmp_file("cap_ghosh.json");
    REQUIRE(run_cli("gen ghosh -o " + small).exit_code == 0);
    const CliResult garbage = run_cli("check -i " + small, "NLW_DIM_CAP=abc");
    CHECK(garbage.exit_code == 2);
    CHECK(garbage.output.find("NLW_DIM_CAP") != std::string::npos);

    const std::string big = tmp_file("cap_ex2n3.json");
    REQUIRE(run_cli("gen example2 --n 3 -o " + big).exit_code == 0);
    const CliResult capped = run_cli("sdp -i " + big + " --split '1,2|3'", "NLW_DIM_CAP=4");
    CHECK(capped.exit_code == 2);
    CHECK(capped.output.find("cap") != std::string::npos);

    CHECK(run_cli("check -i " + big, "NLW_DIM_CAP=64").exit_code == 0);
}

TEST_CASE("repeated runs emit identical bytes") {
    const std::string file = tmp_file("det_ex1n3.json");
    REQUIRE(run_cli("gen example1 --n 3 -o " + file).exit_code == 0);

    const CliResult first = run_cli("report -i " + file + " --full --exact --jobs 3");
    const CliResult second = run_cli("report -i " + file + " --full --exact --jobs 3");
    const CliResult serial = run_cli("report -i " + file + " --full --exact --jobs 1");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output == serial.output);

    const CliResult sdp_a = run_cli("sdp -i " + file + " --split '1,2|3'");
    const CliResult sdp_b = run_cli("sdp -i " + file + " --split '1,2|3'");
    CHECK(sdp_a.exit_code == 0);
    CHECK(sdp_a.output == sdp_b.output);
}
