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

// End-to-end acceptance checks. Each block prints one [PASS]/[FAIL] line;
// the exit code is the number of failing blocks.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/exact.hpp"
#include "nlw/flatten.hpp"
#include "nlw/generators.hpp"
#include "nlw/matrix.hpp"
#include "nlw/oplm.hpp"
#include "nlw/qcore.hpp"
#include "nlw/sdp.hpp"
#include "nlw/state.hpp"
#include "nlw/tiles.hpp"
#include "nlw/witness.hpp"

namespace {

using namespace nlw;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateVector basis_ket(const std::string &name, const std::string &bits) {
    const auto n = static_cast<std::uint32_t>(bits.size());
    return StateVector::exact(name, n, std::vector<std::uint32_t>(n, 2),
                              {{bits, GaussInt{1, 0}}});
}

ComplexMatrix corner_pair_projector(double sign) {
    ComplexMatrix p(4, 4);
    p(0, 0) = 0.5;
    p(3, 3) = 0.5;
    p(0, 3) = 0.5 * sign;
    p(3, 0) = 0.5 * sign;
    return p;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(dist(rng), dist(rng));
    ComplexMatrix h = a;
    h += a.adjoint();
    h *= 0.5;
    return h;
}

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string &why) {
        if (ok) detail << why;
        ok = false;
    }
};

std::vector<std::pair<double, double>> gap_samples;

Outcome corner_triple_gap() {
    Outcome out;
    const StateSet set = ghosh_set();
    const Bipartition b(2, 1);

    auto t0 = std::chrono::steady_clock::now();
    const SdpReport full = ppt_value(make_instance(set, b));
    const double t_full = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const SdpReport pair = ppt_value(make_instance(set, b, {0, 1}));
    const double t_pair = seconds_since(t0);

    if (full.primal_value > 0.999) out.fail("full primal above 0.999");
    if (full.dual_bound >= 1.0) out.fail("full dual bound not below 1");
    if (std::abs(pair.primal_value - 1.0) > 1e-6) out.fail("pair subset not perfect");
    if (t_full >= 1.0 || t_pair >= 1.0) out.fail("solve exceeded 1 s");
    gap_samples.emplace_back(full.primal_value, full.dual_bound);
    gap_samples.emplace_back(pair.primal_value, pair.dual_bound);
    if (out.ok)
        out.detail << "primal " << full.primal_value << ", dual " << full.dual_bound
                   << ", pair primal " << pair.primal_value << ", " << t_full + t_pair << " s";
    return out;
}

Outcome exact_sweep() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t splits = 0;
    for (std::uint32_t n = 3; n <= 8; ++n) {
        const NonlocalityReport rep = certify_all(ghz_uniform_middle_set(n));
        const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
        if (rep.certificates.size() != expected) {
            out.fail("wrong split count at N=" + std::to_string(n));
            continue;
        }
        const std::int64_t den = (std::int64_t{1} << n) - 2;
        for (const auto &cert : rep.certificates) {
            if (!cert.certified()) out.fail("uncertified split " + cert.split.text());
            if (!cert.overlap_sq.exact || !cert.overlap_sq.exact->equals(2, den))
                out.fail("overlap not 2/" + std::to_string(den) + " at " + cert.split.text());
        }
        if (rep.overall != "genuinely-nonlocal-certified" || !rep.strong_nonlocality)
            out.fail("sweep verdict wrong at N=" + std::to_string(n));
        splits += rep.certificates.size();
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) out.fail("sweep exceeded 5 s");
    if (out.ok) out.detail << splits << " splits certified in " << dt << " s";
    return out;
}

Outcome solver_certificate_consistency() {
    Outcome out;
    SdpOptions opts;
    opts.eps_gap = 1e-5;

    const std::vector<std::pair<std::string, StateSet>> probes = {
        {"ghosh", ghosh_set()},
        {"bell-triple", bell_triple()},
        {"ghz-w-3", ghz_w_set(3)},
        {"ghz-w-4", ghz_w_set(4)},
        {"ghz-middle-3", ghz_uniform_middle_set(3)},
        {"ghz-middle-4", ghz_uniform_middle_set(4)},
    };
    std::size_t solves = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto &[label, set] : probes) {
        for (const Bipartition &b : enumerate_bipartitions(set.num_parties())) {
            const Certificate cert = certify_bipartition(set, b);
            if (!cert.certified()) {
                out.fail(label + " " + b.text() + " unexpectedly uncertified");
                continue;
            }
            const DiscriminationInstance inst = make_instance(set, b);
            if (inst.shape.total() > 16) continue;
            const SdpReport rep = ppt_value(inst, opts);
            ++solves;
            gap_samples.emplace_back(rep.primal_value, rep.dual_bound);
            if (rep.primal_value > 0.999)
                out.fail(label + " " + b.text() + " primal above 0.999");
            if (rep.dual_bound >= 1.0)
                out.fail(label + " " + b.text() + " dual bound not below 1");
        }
    }

    const Bipartition marked = Bipartition::parse("1|2,3", 3);
    const StateSet lifted = lifted_bell_triple(3, 1, 2, marked);
    const Bipartition grouping = Bipartition::parse("1,2|3", 3);
    const SdpReport control = ppt_value(make_instance(lifted, grouping), opts);
    gap_samples.emplace_back(control.primal_value, control.dual_bound);
    if (std::abs(control.primal_value - 1.0) > 1e-6)
        out.fail("grouped-control primal not 1");
    if (out.ok)
        out.detail << solves << " certified pairs solved in " << seconds_since(t0)
                   << " s, control primal " << control.primal_value;
    return out;
}

Outcome weighted_minimal_support() {
    Outcome out;
    const MiddleCoeffs coeffs = MiddleCoeffs::uniform(3, {"001", "010", "011"});
    const StateSet set = ghz_weighted_middle_set(coeffs);

    const NonlocalityReport rep = certify_all(set);
    if (rep.certificates.size() != 3) out.fail("expected 3 splits");
    for (const auto &cert : rep.certificates)
        if (!cert.certified()) out.fail("uncertified split " + cert.split.text());

    const EntanglementReport first = entanglement_ranks(set[0]);
    const EntanglementReport second = entanglement_ranks(set[1]);
    const EntanglementReport third = entanglement_ranks(set[2]);
    if (!first.genuinely_entangled || !second.genuinely_entangled)
        out.fail("corner pair not flagged genuinely entangled");
    if (third.genuinely_entangled) out.fail("third state wrongly flagged genuinely entangled");
    for (const auto &[split, rank] : third.ranks) {
        if (split.left_mask() == 1 && rank != 1)
            out.fail("third state rank across party-1 cut is " + std::to_string(rank));
        if (split.left_mask() != 1 && rank != 2)
            out.fail("third state rank across " + split.text() + " is " + std::to_string(rank));
    }
    if (out.ok) out.detail << "3 splits certified, third state rank 1 across party-1 cut";
    return out;
}

Outcome transpose_spectrum() {
    Outcome out;
    const BipartiteShape shape{2, 2};
    const std::vector<double> expected = {-0.5, 0.5, 0.5, 0.5};
    for (const double sign : {1.0, -1.0}) {
        const ComplexMatrix pt = partial_transpose(corner_pair_projector(sign), shape, Side::left);
        const EigDecomposition eig = hermitian_eig(pt);
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (std::abs(eig.eigenvalues[i] - expected[i]) > 1e-10)
                out.fail("eigenvalue " + std::to_string(i) + " off at sign " +
                         std::to_string(sign));
        if (eig.eigenvalues.back() > 0.5 + 1e-10) out.fail("max eigenvalue above 1/2");
    }
    if (out.ok) out.detail << "both corner-pair transposes have spectrum {-1/2, 1/2, 1/2, 1/2}";
    return out;
}

Outcome trace_bound() {
    Outcome out;
    const StateSet set = ghosh_set();
    const DiscriminationInstance inst = make_instance(set, Bipartition(2, 1));
    double worst_eps = 0;
    for (int t = 0; t < 50; ++t) {
        SdpOptions opts;
        const double total = 52.0 + t;
        opts.weights = {(50.0 + t) / total, 1.0 / total, 1.0 / total};
        const SdpSolution sol = ppt_solve(inst, opts);

        const double measured = (inst.rho[0] * sol.povm.elements[0]).trace().real();
        const double eps = 1.0 - measured;
        worst_eps = std::max(worst_eps, eps);

        const TraceBoundResult res = trace_bound_check(sol.povm, inst, 0, eps);
        if (!res.pass) out.fail("bound check failed at t=" + std::to_string(t));
        if (res.trace < 2.0 * (1.0 - eps) - 1e-4)
            out.fail("trace below 2(1-eps)-1e-4 at t=" + std::to_string(t));

        double total_trace = 0;
        for (const auto &m : sol.povm.elements) total_trace += m.trace().real();
        if (std::abs(total_trace - 4.0) > 1e-6)
            out.fail("total trace not 4 at t=" + std::to_string(t));
    }
    if (out.ok) out.detail << "50 near-optimal measurements pass, largest eps " << worst_eps;
    return out;
}

Outcome measurement_space_dims() {
    Outcome out;
    const Bipartition two(2, 1);

    const ToplmVerdict triple = toplm_verdict(bell_triple(), two);
    if (triple.left_dim != 1 || triple.right_dim != 1)
        out.fail("corner triple dims not {1, 1}");

    const StateSet pair = StateSet::checked("corner-pair", {ghz_plus(2), ghz_minus(2)});
    if (oplm_space(pair, two, Side::left).dimension != 3 ||
        oplm_space(pair, two, Side::right).dimension != 3)
        out.fail("corner pair dims not 3");

    const StateSet columns =
        StateSet::checked("columns", {basis_ket("k00", "00"), basis_ket("k01", "01")});
    if (oplm_space(columns, two, Side::left).dimension != 4)
        out.fail("column pair left dim not 4");

    const std::vector<std::pair<std::string, StateSet>> probes = {
        {"bell-triple", bell_triple()},
        {"ghosh", ghosh_set()},
        {"columns", columns},
        {"ghz-w-3", ghz_w_set(3)},
        {"ghz-middle-3", ghz_uniform_middle_set(3)},
        {"ghz-middle-4", ghz_uniform_middle_set(4)},
    };
    std::size_t agreements = 0;
    for (const auto &[label, set] : probes) {
        for (const Bipartition &b : enumerate_bipartitions(set.num_parties())) {
            for (const Side side : {Side::left, Side::right}) {
                const std::size_t numeric = oplm_space(set, b, side).dimension;
                const std::size_t exact = oplm_dimension_exact(set, b, side);
                if (numeric != exact) {
                    out.fail(label + " " + b.text() + " float " + std::to_string(numeric) +
                             " vs exact " + std::to_string(exact));
                } else {
                    ++agreements;
                }
            }
        }
    }
    if (out.ok)
        out.detail << "reference dims {1, 3, 4} reproduced, " << agreements
                   << " exact/float agreements";
    return out;
}

Outcome property_suite() {
    Outcome out;

    const std::vector<BipartiteShape> shapes = {{2, 2}, {2, 3}, {3, 2}, {4, 4}};
    std::uint32_t seed = 11;
    for (const auto &shape : shapes) {
        const ComplexMatrix h = random_hermitian(shape.total(), seed++);
        for (const Side side : {Side::left, Side::right}) {
            const ComplexMatrix pt = partial_transpose(h, shape, side);
            const ComplexMatrix back = partial_transpose(pt, shape, side);
            if ((back - h).frobenius_norm() > 1e-12) out.fail("transpose not involutive");
            if (std::abs((pt.trace() - h.trace()).real()) > 1e-12 ||
                std::abs((pt.trace() - h.trace()).imag()) > 1e-12)
                out.fail("transpose changed the trace");
        }
    }

    for (const StateSet &set : {ghz_uniform_middle_set(3), ghz_w_set(4)}) {
        for (const Bipartition &b : enumerate_bipartitions(set.num_parties())) {
            std::vector<FlattenedState> flats;
            for (const auto &s : set.states()) flats.push_back(flatten(s, b));
            for (std::size_t i = 0; i < flats.size(); ++i)
                for (std::size_t j = 0; j < flats.size(); ++j) {
                    cplx flat_ip = 0;
                    const ComplexMatrix &a = flats[i].coeff;
                    const ComplexMatrix &c = flats[j].coeff;
                    for (std::size_t r = 0; r < a.rows(); ++r)
                        for (std::size_t col = 0; col < a.cols(); ++col)
                            flat_ip += std::conj(a(r, col)) * c(r, col);
                    const cplx direct = inner_product(set[i], set[j]);
                    if (std::abs(flat_ip - direct) > 1e-10)
                        out.fail("flatten changed an inner product at " + b.text());
                }
        }
    }

    if (gap_samples.empty()) out.fail("no duality samples collected");
    for (const auto &[p, d] : gap_samples)
        if (p > d + 1e-6) out.fail("weak duality violated");

    const StateSet set = ghosh_set();
    const Bipartition b(2, 1);
    const double full = ppt_value(make_instance(set, b)).primal_value;
    for (const auto &subset :
         {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{0, 2},
          std::vector<std::size_t>{1, 2}}) {
        const double sub = ppt_value(make_instance(set, b, subset)).primal_value;
        if (sub < full - 1e-6) out.fail("subset value below full-set value");
    }

    for (std::uint32_t n = 3; n <= 8; ++n) {
        std::map<std::string, std::size_t> hits;
        for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
            std::string s;
            for (std::uint32_t p = 0; p < n; ++p) s += ((bits >> (n - 1 - p)) & 1) ? '1' : '0';
            ++hits[pair_to_bipartition(s).text()];
        }
        const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
        if (hits.size() != expected) out.fail("split image wrong at N=" + std::to_string(n));
        for (const auto &[text, count] : hits)
            if (count != 2) out.fail("split " + text + " hit " + std::to_string(count) + " times");
    }

    if (out.ok)
        out.detail << "transpose, flatten, duality (" << gap_samples.size()
                   << " samples), monotonicity, 2-to-1 split map all hold";
    return out;
}

Outcome tile_goldens() {
    Outcome out;
    struct Row {
        StateSet set;
        const char *split;
        const char *file;
    };
    const std::vector<Row> rows = {
        {bell_triple(), "1|2", "fig1a.txt"},
        {ghosh_set(), "1|2", "fig1b.txt"},
        {ghz_w_set(3), "1,2|3", "fig2a.txt"},
        {ghz_w_set(4), "1,2|3,4", "fig2b.txt"},
        {ghz_uniform_middle_set(3), "1,2|3", "fig3a.txt"},
        {ghz_uniform_middle_set(4), "1,2|3,4", "fig3b.txt"},
    };
    for (const auto &row : rows) {
        const Bipartition b = Bipartition::parse(row.split, row.set.num_parties());
        const std::string rendered = render_ascii(tile_diagram(row.set, b));
        const std::string golden = read_file(std::string(NLW_GOLDEN_DIR) + "/" + row.file);
        if (rendered != golden) out.fail(std::string(row.file) + " differs");
    }
    if (out.ok) out.detail << rows.size() << " diagrams byte-identical to the golden files";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria = {
        {"corner-triple-gap", corner_triple_gap},
        {"exact-sweep", exact_sweep},
        {"solver-certificate-consistency", solver_certificate_consistency},
        {"weighted-minimal-support", weighted_minimal_support},
        {"transpose-spectrum", transpose_spectrum},
        {"trace-bound", trace_bound},
        {"measurement-space-dims", measurement_space_dims},
        {"property-suite", property_suite},
        {"tile-goldens", tile_goldens},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception &e) {
            out.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %zu %s: %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    out.detail.str().c_str());
        if (!out.ok) ++failures;
    }
    return failures;
}
