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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlw/generators.hpp"
#include "nlw/io.hpp"
#include "nlw/oplm.hpp"
#include "nlw/qcore.hpp"
#include "nlw/report.hpp"
#include "nlw/sdp.hpp"
#include "nlw/tiles.hpp"
#include "nlw/util.hpp"
#include "nlw/witness.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUndetermined = 1;
constexpr int kUsage = 2;

struct Options {
    std::string input;
    std::string output;
    std::string split;
    std::string format = "json";
    unsigned jobs = 1;
    bool exact = false;
    nlw::SdpOptions sdp;
};

void add_io_flags(CLI::App *cmd, Options &opt, bool needs_input) {
    auto *in = cmd->add_option("-i,--input", opt.input, "State-set JSON file");
    if (needs_input) in->required();
    cmd->add_option("-o,--output", opt.output, "Write output here instead of stdout");
}

void add_solver_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--tol-feas", opt.sdp.eps_feas, "Completeness residual allowance");
    cmd->add_option("--tol-psd", opt.sdp.eps_psd, "Eigenvalue slack allowance");
    cmd->add_option("--tol-perfect", opt.sdp.eps_perfect,
                    "Threshold for calling a discrimination perfect");
    cmd->add_option("--tol-conv", opt.sdp.eps_conv, "Residual target for convergence");
    cmd->add_option("--max-iters", opt.sdp.max_iters, "Iteration cap");
}

void add_format_flag(CLI::App *cmd, Options &opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
}

void emit(const Options &opt, const std::string &text) {
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        nlw::write_text_file(opt.output, text);
    }
}

void emit_json(const Options &opt, const nlohmann::json &doc) {
    emit(opt, doc.dump(2) + "\n");
}

nlw::Bipartition resolve_split(const Options &opt, const nlw::StateSet &set) {
    if (!opt.split.empty()) return nlw::Bipartition::parse(opt.split, set.num_parties());
    if (set.num_parties() == 2) return nlw::Bipartition(2, 1);
    throw std::invalid_argument("--split is required for more than two parties");
}

std::string backend_label(const nlw::StateSet &set) {
    bool any_exact = false;
    bool any_float = false;
    for (const auto &s : set.states()) {
        (s.backend() == nlw::Backend::exact ? any_exact : any_float) = true;
    }
    if (any_exact && any_float) return "mixed";
    return any_exact ? "exact" : "float";
}

std::vector<std::string> split_csv(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string family;
    std::uint32_t n = 0;
    std::uint32_t l = 0;
    std::uint32_t r = 0;
    std::string split;
    std::string coeffs;
};

nlw::StateSet build_family(const GenArgs &a) {
    const std::string &f = a.family;
    if (f == "bell" || f == "ghosh") {
        if (a.n != 0 && a.n != 2) throw std::invalid_argument(f + " is a two-party family");
        auto set = f == "bell" ? nlw::bell_triple() : nlw::ghosh_set();
        return nlw::StateSet::checked(f, set.states());
    }
    if (a.n < 3) throw std::invalid_argument(f + " requires --n of at least 3");
    if (f == "eq2") {
        std::uint32_t l = a.l == 0 ? 1 : a.l;
        std::uint32_t r = a.r == 0 ? a.n : a.r;
        nlw::Bipartition split = a.split.empty()
                                     ? nlw::Bipartition(a.n, 1ull << (l - 1))
                                     : nlw::Bipartition::parse(a.split, a.n);
        auto set = nlw::lifted_bell_triple(a.n, l, r, split);
        return nlw::StateSet::checked(
            "eq2-n" + std::to_string(a.n) + "-l" + std::to_string(l) + "-r" + std::to_string(r),
            set.states());
    }
    if (f == "eq3") {
        nlw::Bipartition split = a.split.empty() ? nlw::Bipartition(a.n, 1)
                                                 : nlw::Bipartition::parse(a.split, a.n);
        auto set = nlw::corner_bell_triple(split);
        return nlw::StateSet::checked(
            "eq3-n" + std::to_string(a.n) + "-m" + std::to_string(split.left_mask()),
            set.states());
    }
    if (f == "example1") {
        if (a.n != 3 && a.n != 4) throw std::invalid_argument("example1 requires --n 3 or 4");
        return nlw::StateSet::checked("example1-n" + std::to_string(a.n),
                                      nlw::ghz_w_set(a.n).states());
    }
    if (f == "example2") {
        if (a.n != 3 && a.n != 4) throw std::invalid_argument("example2 requires --n 3 or 4");
        return nlw::StateSet::checked("example2-n" + std::to_string(a.n),
                                      nlw::ghz_uniform_middle_set(a.n).states());
    }
    if (f == "theorem1") {
        return nlw::StateSet::checked("theorem1-n" + std::to_string(a.n),
                                      nlw::ghz_uniform_middle_set(a.n).states());
    }
    if (f == "theorem2") {
        if (a.coeffs.empty()) {
            throw std::invalid_argument("theorem2 requires --coeffs (comma-separated strings)");
        }
        auto coeffs = nlw::MiddleCoeffs::uniform(a.n, split_csv(a.coeffs));
        auto set = nlw::ghz_weighted_middle_set(coeffs);
        return nlw::StateSet::checked("theorem2-n" + std::to_string(a.n), set.states());
    }
    throw std::invalid_argument("unknown family " + f);
}

int run_gen(const GenArgs &args, const Options &opt) {
    nlw::StateSet set = build_family(args);
    emit_json(opt, nlw::stateset_to_json(set));
    return kOk;
}

// ---------------------------------------------------------------- check

int run_check(const Options &opt) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    nlohmann::json doc;
    doc["valid"] = true;
    doc["set"] = set.name();
    doc["num_parties"] = set.num_parties();
    doc["num_states"] = set.size();
    doc["backend"] = backend_label(set);
    doc["orthogonal"] = true;
    if (opt.format == "text") {
        std::ostringstream out;
        out << "set " << set.name() << ": valid, " << set.size() << " states on "
            << set.num_parties() << " parties (" << backend_label(set) << " backend)\n";
        emit(opt, out.str());
    } else {
        emit_json(opt, doc);
    }
    return kOk;
}

// ---------------------------------------------------------------- certify

std::string certificate_line(const nlw::Certificate &c) {
    std::ostringstream out;
    out << c.split.text() << ": " << c.verdict << " (bell_pair_ok="
        << (c.bell_pair_ok ? "true" : "false") << ", overlap_sq=" << c.overlap_sq.str() << ")";
    return out.str();
}

int run_certify(const Options &opt) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    if (opt.exact && !set.all_exact()) {
        throw std::invalid_argument("--exact requires an exact-backend state set");
    }
    if (!opt.split.empty()) {
        nlw::Certificate c =
            nlw::certify_bipartition(set, nlw::Bipartition::parse(opt.split, set.num_parties()));
        if (opt.format == "text") {
            emit(opt, certificate_line(c) + "\n");
        } else {
            emit_json(opt, nlw::certificate_to_json(c));
        }
        return c.certified() ? kOk : kUndetermined;
    }
    nlw::NonlocalityReport report = nlw::certify_all(set);
    if (opt.format == "text") {
        std::ostringstream out;
        out << "set " << report.set_name << "\n";
        for (const auto &c : report.certificates) out << certificate_line(c) << "\n";
        out << "overall: " << report.overall << "\n";
        out << "strong_nonlocality: " << (report.strong_nonlocality ? "true" : "false") << "\n";
        emit(opt, out.str());
    } else {
        emit_json(opt, nlw::nonlocality_report_to_json(report));
    }
    return report.overall == "genuinely-nonlocal-certified" ? kOk : kUndetermined;
}

// ---------------------------------------------------------------- sdp

int run_sdp(const Options &opt, const std::string &subset_csv, bool expect_indistinguishable) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    nlw::Bipartition split = resolve_split(opt, set);
    std::vector<std::size_t> subset;
    for (const auto &tok : split_csv(subset_csv)) {
        std::size_t idx = std::stoul(tok);
        if (idx < 1 || idx > set.size()) {
            throw std::invalid_argument("--subset index out of range: " + tok);
        }
        subset.push_back(idx - 1);
    }
    nlw::SdpReport report = nlw::ppt_value(nlw::make_instance(set, split, subset), opt.sdp);
    if (opt.format == "text") {
        std::ostringstream out;
        out << "split " << split.text() << "\n"
            << "primal " << nlw::format_sig(report.primal_value) << "\n"
            << "dual_bound " << nlw::format_sig(report.dual_bound) << "\n"
            << "iters " << report.iterations << "\n"
            << "status " << report.status << "\n"
            << "perfect " << (report.perfect ? "true" : "false") << "\n";
        emit(opt, out.str());
    } else {
        emit_json(opt, nlw::sdp_report_to_json(report));
    }
    if (expect_indistinguishable && report.perfect) return kUndetermined;
    return kOk;
}

// ---------------------------------------------------------------- oplm

int run_oplm(const Options &opt) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    nlw::Bipartition split = resolve_split(opt, set);
    nlw::ToplmVerdict verdict = nlw::toplm_verdict(set, split, opt.exact);
    if (opt.format == "text") {
        std::ostringstream out;
        out << "split " << split.text() << "\n"
            << "left_dim " << verdict.left_dim << " ("
            << (verdict.trivial_left ? "trivial" : "non-trivial") << ")\n"
            << "right_dim " << verdict.right_dim << " ("
            << (verdict.trivial_right ? "trivial" : "non-trivial") << ")\n";
        emit(opt, out.str());
    } else {
        emit_json(opt, nlw::toplm_to_json(verdict));
    }
    return verdict.trivial_left && verdict.trivial_right ? kOk : kUndetermined;
}

// ---------------------------------------------------------------- tiles

int run_tiles(const Options &opt, const std::string &tile_format) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    nlw::Bipartition split = resolve_split(opt, set);
    nlw::TileDiagram diagram = nlw::tile_diagram(set, split);
    emit(opt, tile_format == "svg" ? nlw::render_svg(diagram) : nlw::render_ascii(diagram));
    return kOk;
}

// ---------------------------------------------------------------- report

int run_report(const Options &opt, bool full) {
    nlw::StateSet set = nlw::load_stateset(opt.input);
    nlw::ReportOptions ropt;
    ropt.full = full;
    ropt.exact_oplm = opt.exact && set.all_exact();
    ropt.jobs = opt.jobs;
    ropt.sdp = opt.sdp;
    nlohmann::json doc = nlw::full_report(set, ropt);
    if (opt.format == "text") {
        std::ostringstream out;
        out << "set " << doc["set"].get<std::string>() << " (schema " << doc["schema"].get<std::string>()
            << ")\n";
        out << "overall: " << doc["overall"].get<std::string>() << "\n";
        out << "strong_nonlocality: " << (doc["strong_nonlocality"].get<bool>() ? "true" : "false")
            << "\n";
        emit(opt, out.str());
    } else {
        emit_json(opt, doc);
    }
    return doc["overall"].get<std::string>() == "genuinely-nonlocal-certified" ? kOk
                                                                               : kUndetermined;
}

int apply_dim_cap_env() {
    const char *cap = std::getenv("NLW_DIM_CAP");
    if (cap == nullptr) return kOk;
    try {
        std::size_t parsed = std::stoull(cap);
        if (parsed == 0) throw std::invalid_argument("zero");
        nlw::set_dim_cap(parsed);
    } catch (const std::exception &) {
        std::cerr << "error: NLW_DIM_CAP must be a positive integer, got \"" << cap << "\"\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Verification toolkit for orthogonal multipartite state sets:\n"
                 "certificates and PPT-measurement bounds for local indistinguishability."};
    app.require_subcommand(1);

    Options opt;
    GenArgs gen_args;
    std::string subset_csv;
    std::string tile_format = "ascii";
    bool expect_indistinguishable = false;
    bool full_report_flag = false;

    CLI::App *gen = app.add_subcommand("gen", "Generate a built-in state-set family");
    gen->add_option("family", gen_args.family, "One of: bell, ghosh, eq2, eq3, example1, example2, theorem1, theorem2")
        ->required();
    gen->add_option("--n", gen_args.n, "Number of parties");
    gen->add_option("--l", gen_args.l, "Left marked party (eq2)");
    gen->add_option("--r", gen_args.r, "Right marked party (eq2)");
    gen->add_option("--split", opt.split, "Reference bipartition, e.g. \"1,2|3\" (eq2, eq3)");
    gen->add_option("--coeffs", gen_args.coeffs,
                    "Comma-separated middle-layer support strings (theorem2)");
    add_io_flags(gen, opt, false);

    CLI::App *check = app.add_subcommand("check", "Validate a state-set file");
    add_io_flags(check, opt, true);
    add_format_flag(check, opt);

    CLI::App *certify = app.add_subcommand(
        "certify", "Run the corner-overlap certificate over bipartitions");
    add_io_flags(certify, opt, true);
    certify->add_option("--split", opt.split, "Certify one bipartition, e.g. \"1,2|3\"");
    certify->add_flag("--all-bipartitions", "Sweep every bipartition (the default)");
    certify->add_flag("--exact", opt.exact, "Fail unless the set supports exact arithmetic");
    certify->add_option("--jobs", opt.jobs, "Worker threads");
    add_format_flag(certify, opt);

    CLI::App *sdp = app.add_subcommand(
        "sdp", "Optimal PPT-measurement discrimination value for one bipartition");
    add_io_flags(sdp, opt, true);
    sdp->add_option("--split", opt.split, "Bipartition to flatten across");
    sdp->add_option("--subset", subset_csv, "1-based state indices to keep, e.g. \"1,2\"");
    sdp->add_flag("--expect-indistinguishable", expect_indistinguishable,
                  "Exit 1 if the optimum reaches perfect discrimination");
    add_solver_flags(sdp, opt);
    add_format_flag(sdp, opt);

    CLI::App *oplm = app.add_subcommand(
        "oplm", "Orthogonality-preserving local measurement analysis for one bipartition");
    add_io_flags(oplm, opt, true);
    oplm->add_option("--split", opt.split, "Bipartition to analyse");
    oplm->add_flag("--exact", opt.exact, "Recompute dimensions by integer elimination");
    add_format_flag(oplm, opt);

    CLI::App *tiles = app.add_subcommand("tiles", "Render the support grid of a state set");
    add_io_flags(tiles, opt, true);
    tiles->add_option("--split", opt.split, "Bipartition to flatten across");
    tiles->add_option("--format", tile_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    CLI::App *report = app.add_subcommand("report", "Combined machine-readable report");
    add_io_flags(report, opt, true);
    report->add_flag("--full", full_report_flag,
                     "Also run the solver and measurement analysis per bipartition");
    report->add_flag("--exact", opt.exact, "Use integer elimination where possible");
    report->add_option("--jobs", opt.jobs, "Worker threads");
    add_solver_flags(report, opt);
    add_format_flag(report, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (int code = apply_dim_cap_env(); code != kOk) return code;

    try {
        if (gen->parsed()) return run_gen(gen_args, opt);
        if (check->parsed()) return run_check(opt);
        if (certify->parsed()) return run_certify(opt);
        if (sdp->parsed()) return run_sdp(opt, subset_csv, expect_indistinguishable);
        if (oplm->parsed()) return run_oplm(opt);
        if (tiles->parsed()) return run_tiles(opt, tile_format);
        if (report->parsed()) return run_report(opt, full_report_flag);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
