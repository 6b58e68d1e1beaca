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

#include "nlw/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <deque>

#include "nlw/flatten.hpp"
#include "nlw/qcore.hpp"

namespace nlw {

namespace {

double real_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += (std::conj(a(i, j)) * b(i, j)).real();
    return s;
}

double frob_dist(const ComplexMatrix &a, const ComplexMatrix &b) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

std::vector<double> resolve_weights(const std::vector<double> &weights, std::size_t k_states) {
    if (weights.empty()) return std::vector<double>(k_states, 1.0 / static_cast<double>(k_states));
    if (weights.size() != k_states)
        throw std::invalid_argument("need one objective weight per state");
    double total = 0;
    for (double w : weights) {
        if (w < 0) throw std::invalid_argument("objective weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("objective weights must sum to 1");
    return weights;
}

/// Solves (B + ridge*I) gamma = rhs for a small symmetric positive
/// semidefinite B by Cholesky. Returns false if the factorization breaks
/// down even with the ridge.
bool solve_spd(std::vector<std::vector<double>> b, std::vector<double> rhs,
               std::vector<double> &gamma) {
    const std::size_t n = rhs.size();
    double tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += b[i][i];
    const double ridge = 1e-13 * tr + 1e-300;
    for (std::size_t i = 0; i < n; ++i) b[i][i] += ridge;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double s = b[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= b[i][k] * b[j][k];
            b[i][j] = s / b[j][j];
        }
        double s = b[i][i];
        for (std::size_t k = 0; k < i; ++k) s -= b[i][k] * b[i][k];
        if (!(s > 0)) return false;
        b[i][i] = std::sqrt(s);
    }
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[i];
        for (std::size_t k = 0; k < i; ++k) s -= b[i][k] * rhs[k];
        rhs[i] = s / b[i][i];
    }
    gamma.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= b[k][ii] * gamma[k];
        gamma[ii] = s / b[ii][ii];
    }
    return true;
}

}  // namespace

DiscriminationInstance DiscriminationInstance::checked(BipartiteShape shape,
                                                       std::vector<ComplexMatrix> rho) {
    if (rho.empty()) throw std::invalid_argument("instance needs at least one state");
    if (shape.total() > dim_cap())
        throw dim_cap_error("instance dimension exceeds cap " + std::to_string(dim_cap()));
    for (const auto &r : rho) {
        shape.check(r);
        if (r.hermitian_defect() > 1e-10)
            throw std::invalid_argument("density matrix is not Hermitian");
        if (std::abs(r.trace().real() - 1.0) > 1e-10 || std::abs(r.trace().imag()) > 1e-10)
            throw std::invalid_argument("density matrix trace is not 1");
        if (min_eigenvalue(r) < -1e-10)
            throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    return DiscriminationInstance{shape, std::move(rho)};
}

DiscriminationInstance make_instance(const StateSet &set, const Bipartition &b,
                                     const std::vector<std::size_t> &subset) {
    std::vector<std::size_t> idx = subset;
    if (idx.empty()) {
        idx.resize(set.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    }
    std::vector<ComplexMatrix> rho;
    BipartiteShape shape{0, 0};
    for (std::size_t i : idx) {
        if (i >= set.size()) throw std::invalid_argument("subset index out of range");
        const FlattenedState f = flatten(set[i], b);
        shape = f.shape;
        const std::size_t m = f.shape.left_dim, n = f.shape.right_dim;
        std::vector<cplx> v(m * n);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) v[r * n + c] = f.coeff(r, c);
        ComplexMatrix d(m * n, m * n);
        for (std::size_t a = 0; a < v.size(); ++a) {
            if (v[a] == cplx(0, 0)) continue;
            for (std::size_t bcol = 0; bcol < v.size(); ++bcol)
                d(a, bcol) = v[a] * std::conj(v[bcol]);
        }
        rho.push_back(std::move(d));
    }
    return DiscriminationInstance::checked(shape, std::move(rho));
}

SdpSolution ppt_solve(const DiscriminationInstance &instance, const SdpOptions &opts) {
    const std::size_t k_states = instance.num_states();
    if (k_states < 2) throw std::invalid_argument("discrimination needs at least two states");
    if (opts.sigma <= 0) throw std::invalid_argument("penalty must be positive");
    if (opts.relaxation <= 0 || opts.relaxation >= 2)
        throw std::invalid_argument("relaxation factor must lie in (0, 2)");
    const std::vector<double> w = resolve_weights(opts.weights, k_states);
    const std::size_t dim = instance.shape.total();
    const BipartiteShape shape = instance.shape;

    std::vector<ComplexMatrix> target(k_states);  // w_k rho_k
    for (std::size_t k = 0; k < k_states; ++k) {
        target[k] = instance.rho[k].symmetrized();
        target[k] *= w[k];
    }

    const ComplexMatrix eye = ComplexMatrix::identity(dim);
    ComplexMatrix init = eye;
    init *= 1.0 / static_cast<double>(k_states);

    // Relaxed consensus splitting. Each element carries two cone copies
    // (plain cone and partial-transpose cone); the driver variable v is one
    // matrix per copy. A sweep computes the affine-feasible iterate x from
    // the v average, reflects, projects, and moves v toward consensus:
    //
    //   x_k  = Proj_{sum = I}( (v_k^psd + v_k^ppt)/2 + w_k rho_k / (2 sigma) )
    //   z_k^c = Proj_c( 2 x_k - v_k^c )
    //   v_k^c += alpha (z_k^c - x_k)
    //
    // The fixed points are exactly the optima, and the sweep is an averaged
    // map in v, which is what makes the acceleration below sound.
    std::vector<ComplexMatrix> x(k_states, init);
    std::vector<ComplexMatrix> v_psd(k_states, init), v_ppt(k_states, init);
    std::vector<ComplexMatrix> z_psd(k_states, init), z_ppt(k_states, init);
    std::vector<PsdProjector> proj_psd(k_states, PsdProjector(dim));
    std::vector<PsdProjector> proj_ppt(k_states, PsdProjector(dim));

    double sigma = opts.sigma;
    const double alpha = opts.relaxation;

    const std::size_t n2 = dim * dim;
    const std::size_t state_len = 4 * k_states * n2;

    auto pack_matrix = [&](const ComplexMatrix &m, std::vector<double> &s, std::size_t &pos) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                s[pos++] = m(i, j).real();
                s[pos++] = m(i, j).imag();
            }
    };
    auto unpack_matrix = [&](const std::vector<double> &s, std::size_t &pos, ComplexMatrix &m) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                const double re = s[pos++];
                const double im = s[pos++];
                m(i, j) = cplx(re, im);
            }
    };
    auto pack_state = [&](std::vector<double> &s) {
        std::size_t pos = 0;
        for (std::size_t k = 0; k < k_states; ++k) pack_matrix(v_psd[k], s, pos);
        for (std::size_t k = 0; k < k_states; ++k) pack_matrix(v_ppt[k], s, pos);
    };
    auto unpack_state = [&](const std::vector<double> &s) {
        std::size_t pos = 0;
        for (std::size_t k = 0; k < k_states; ++k) unpack_matrix(s, pos, v_psd[k]);
        for (std::size_t k = 0; k < k_states; ++k) unpack_matrix(s, pos, v_ppt[k]);
    };

    double r_primal = 0, r_dual = 0;
    std::size_t evals = 0;

    auto apply_map = [&](const std::vector<double> &in, std::vector<double> &image) {
        ++evals;
        unpack_state(in);

        ComplexMatrix defect(dim, dim);
        defect -= eye;
        for (std::size_t k = 0; k < k_states; ++k) {
            x[k] = v_psd[k];
            x[k] += v_ppt[k];
            x[k] *= 0.5;
            ComplexMatrix grad = target[k];
            grad *= 1.0 / (2.0 * sigma);
            x[k] += grad;
            defect += x[k];
        }
        defect *= 1.0 / static_cast<double>(k_states);
        for (std::size_t k = 0; k < k_states; ++k) x[k] -= defect;

        r_primal = 0;
        r_dual = 0;
        for (std::size_t k = 0; k < k_states; ++k) {
            ComplexMatrix reflect = x[k];
            reflect *= 2.0;
            reflect -= v_psd[k];
            ComplexMatrix z_new = proj_psd[k].project(reflect.symmetrized());
            r_dual = std::max(r_dual, sigma * frob_dist(z_new, z_psd[k]));
            z_psd[k] = std::move(z_new);
            r_primal = std::max(r_primal, frob_dist(x[k], z_psd[k]));
            ComplexMatrix step = z_psd[k];
            step -= x[k];
            step *= alpha;
            v_psd[k] += step;

            reflect = x[k];
            reflect *= 2.0;
            reflect -= v_ppt[k];
            ComplexMatrix pt_in = partial_transpose(reflect.symmetrized(), shape, Side::left);
            ComplexMatrix pt_out = proj_ppt[k].project(pt_in);
            z_new = partial_transpose(pt_out, shape, Side::left);
            r_dual = std::max(r_dual, sigma * frob_dist(z_new, z_ppt[k]));
            z_ppt[k] = std::move(z_new);
            r_primal = std::max(r_primal, frob_dist(x[k], z_ppt[k]));
            step = z_ppt[k];
            step -= x[k];
            step *= alpha;
            v_ppt[k] += step;
        }

        pack_state(image);
    };

    // Anderson acceleration over the sweep map, type II with a short memory
    // of iterate/residual pairs. Extrapolated iterates are taken eagerly, one
    // sweep each; the safeguard tracks the best residual seen and rolls back
    // to that iterate, dropping the affine model and pausing extrapolation,
    // whenever the residual balloons or stops improving. The accelerated run
    // therefore cannot run away where the plain one converges, and it rescues
    // the degenerate instances whose plain splitting tail decays like 1/k.
    constexpr std::size_t kAaMemory = 48;
    std::deque<std::vector<double>> dif_s, dif_g;
    std::vector<std::vector<double>> gram;  // Gram matrix of the dif_g columns
    std::vector<double> prev_s, prev_g;
    bool have_prev = false;

    auto clear_history = [&]() {
        dif_s.clear();
        dif_g.clear();
        gram.clear();
        have_prev = false;
    };

    auto push_history = [&](const std::vector<double> &s_new, const std::vector<double> &g_new) {
        if (have_prev) {
            if (dif_s.size() == kAaMemory) {
                dif_s.pop_front();
                dif_g.pop_front();
                gram.erase(gram.begin());
                for (auto &row : gram) row.erase(row.begin());
            }
            std::vector<double> ds(state_len), dg(state_len);
            for (std::size_t t = 0; t < state_len; ++t) {
                ds[t] = s_new[t] - prev_s[t];
                dg[t] = g_new[t] - prev_g[t];
            }
            const std::size_t cols = dif_g.size();
            std::vector<double> row(cols + 1);
            for (std::size_t a = 0; a < cols; ++a) {
                double acc = 0;
                for (std::size_t t = 0; t < state_len; ++t) acc += dif_g[a][t] * dg[t];
                row[a] = acc;
            }
            double acc = 0;
            for (double v : dg) acc += v * v;
            row[cols] = acc;
            for (std::size_t a = 0; a < cols; ++a) gram[a].push_back(row[a]);
            gram.push_back(std::move(row));
            dif_s.push_back(std::move(ds));
            dif_g.push_back(std::move(dg));
        }
        prev_s = s_new;
        prev_g = g_new;
        have_prev = true;
    };

    auto aa_candidate = [&](const std::vector<double> &s_cur, const std::vector<double> &g_cur,
                            std::vector<double> &cand) -> bool {
        const std::size_t cols = dif_s.size();
        std::vector<double> rhs(cols, 0.0);
        for (std::size_t a = 0; a < cols; ++a) {
            double acc = 0;
            for (std::size_t t = 0; t < state_len; ++t) acc += dif_g[a][t] * g_cur[t];
            rhs[a] = acc;
        }
        std::vector<double> gamma;
        if (!solve_spd(gram, std::move(rhs), gamma)) return false;
        cand = s_cur;
        for (std::size_t t = 0; t < state_len; ++t) cand[t] += g_cur[t];
        for (std::size_t a = 0; a < cols; ++a) {
            const double ga = gamma[a];
            if (ga == 0.0) continue;
            for (std::size_t t = 0; t < state_len; ++t)
                cand[t] -= ga * (dif_s[a][t] + dif_g[a][t]);
        }
        for (double v : cand)
            if (!std::isfinite(v)) return false;
        return true;
    };

    // The x iterate satisfies completeness exactly but sits at distance
    // r_primal from the cones, so mixing it toward the uniform POVM I/K with
    //   theta = K r / (1 + K r),   r = r_primal (padded for rounding),
    // yields an exactly feasible POVM: lambda_min of each element and of its
    // partial transpose is at least -r against the PSD points z_k, and the
    // mix absorbs that defect. Reported primal values are values of this
    // feasible point, hence true lower bounds at any iteration count.
    auto mix_theta = [&]() {
        const double rp_pad = r_primal * (1.0 + 1e-10) + 1e-15;
        const double kk = static_cast<double>(k_states);
        return std::min(1.0, kk * rp_pad / (1.0 + kk * rp_pad));
    };

    // Dual certificate: any Hermitian Y with Y - w_k rho_k = A_k + PT(B_k),
    // A_k and B_k PSD, upper-bounds the optimum by Tr(Y). Stationarity of
    // the x sweep step gives the completeness multiplier
    //   Y0 = w_k rho_k - sigma (2 x_k - v_k^psd - v_k^ppt),
    // identical for every k by construction, and the cone multipliers
    //   A_k = sigma (z_k^psd - 2 x_k + v_k^psd),
    //   D_k = sigma (z_k^ppt - 2 x_k + v_k^ppt)   (B_k = PT(D_k)),
    // are projection gaps, PSD up to solver accuracy. The identity shift
    // absorbs the remaining defect, so the bound is valid at any iteration
    // count (docs/dual-bound.md). Reads the scratch of the last sweep and
    // returns {feasible primal value, dual bound} for that iterate.
    auto certified_pair = [&]() -> std::pair<double, double> {
        const double theta = mix_theta();
        double primal = 0;
        double traces = 0;
        for (std::size_t k = 0; k < k_states; ++k) {
            primal += real_inner(target[k], x[k]);
            traces += target[k].trace().real();
        }
        primal = (1.0 - theta) * primal + (theta / static_cast<double>(k_states)) * traces;
        primal = std::clamp(primal, 0.0, 1.0);

        std::vector<ComplexMatrix> d_pt(k_states);
        for (std::size_t k = 0; k < k_states; ++k) {
            ComplexMatrix d = z_ppt[k];
            d += v_ppt[k];
            ComplexMatrix two_x = x[k];
            two_x *= 2.0;
            d -= two_x;
            d *= sigma;
            ComplexMatrix b = psd_project(partial_transpose(d.symmetrized(), shape, Side::left), 1e-6);
            d_pt[k] = partial_transpose(b, shape, Side::left);
        }
        ComplexMatrix y0(dim, dim);
        for (std::size_t k = 0; k < k_states; ++k) {
            ComplexMatrix y_k = target[k];
            ComplexMatrix drift = x[k];
            drift *= 2.0;
            drift -= v_psd[k];
            drift -= v_ppt[k];
            drift *= sigma;
            y_k -= drift;
            y0 += y_k;
        }
        y0 *= 1.0 / static_cast<double>(k_states);
        y0 = y0.symmetrized();

        double shift = 0;
        for (std::size_t k = 0; k < k_states; ++k) {
            ComplexMatrix rem = y0;
            rem -= target[k];
            rem -= d_pt[k];
            const double lam_min = min_eigenvalue(rem.symmetrized(), 1e-6);
            shift = std::max(shift, -lam_min);
        }
        shift += 1e-12 * (1.0 + y0.frobenius_norm());
        return {primal, y0.trace().real() + shift * static_cast<double>(dim)};
    };

    std::vector<double> s(state_len), g(state_len), image(state_len);
    std::vector<double> next(state_len);
    pack_state(s);

    auto eval_here = [&]() {
        apply_map(s, image);
        double r2 = 0;
        for (std::size_t t = 0; t < state_len; ++t) {
            g[t] = image[t] - s[t];
            r2 += g[t] * g[t];
        }
        return std::sqrt(r2);
    };

    double res = eval_here();
    push_history(s, g);

    std::vector<double> best_s = s;
    double best_res = res;
    std::size_t since_best = 0;
    std::size_t cooldown = 0;

    bool converged = r_primal <= opts.eps_conv && r_dual <= opts.eps_conv;
    std::size_t since_adapt = 0;
    std::size_t since_gap = 0;

    while (!converged && evals < opts.max_iters) {
        if (cooldown == 0 && !dif_s.empty() && aa_candidate(s, g, next)) {
            s.swap(next);
        } else {
            s.swap(image);
            if (cooldown > 0) --cooldown;
        }
        res = eval_here();
        push_history(s, g);
        converged = r_primal <= opts.eps_conv && r_dual <= opts.eps_conv;

        if (res < best_res) {
            best_res = res;
            best_s = s;
            since_best = 0;
        } else if (!std::isfinite(res) || res > 20.0 * best_res || ++since_best >= 256) {
            s = best_s;
            clear_history();
            res = eval_here();
            push_history(s, g);
            best_res = std::min(best_res, res);
            since_best = 0;
            cooldown = 8;
            converged = r_primal <= opts.eps_conv && r_dual <= opts.eps_conv;
        }

        if (!converged && ++since_gap >= 256) {
            since_gap = 0;
            const auto [p_now, d_now] = certified_pair();
            if (d_now - p_now <= opts.eps_gap) converged = true;
        }

        if (opts.adapt_sigma && ++since_adapt >= 64 && !converged && evals < opts.max_iters) {
            double factor = 1.0;
            if (r_primal > 10.0 * r_dual && sigma < 1e4)
                factor = 2.0;
            else if (r_dual > 10.0 * r_primal && sigma > 1e-4)
                factor = 0.5;
            since_adapt = 0;
            if (factor != 1.0) {
                sigma *= factor;
                // Keep the implied multipliers sigma (x - v) fixed across the
                // change: v <- x (1 - 1/f) + v / f, per cone copy.
                std::size_t pos = 0;
                std::vector<double> xs(2 * n2);
                for (std::size_t half = 0; half < 2; ++half) {
                    for (std::size_t k = 0; k < k_states; ++k) {
                        std::size_t xpos = 0;
                        pack_matrix(x[k], xs, xpos);
                        for (std::size_t t = 0; t < 2 * n2; ++t, ++pos) {
                            s[pos] = xs[t] * (1.0 - 1.0 / factor) + s[pos] / factor;
                        }
                    }
                }
                clear_history();
                res = eval_here();
                push_history(s, g);
                best_s = s;
                best_res = res;
                since_best = 0;
                converged = r_primal <= opts.eps_conv && r_dual <= opts.eps_conv;
            }
        }
    }

    if (!converged && res > best_res) {
        // Report from the best iterate seen, not from a final excursion.
        s = best_s;
        const std::size_t spent = evals;
        eval_here();
        evals = spent;
    }

    SdpSolution out;
    out.report.iterations = evals;
    out.report.primal_residual = r_primal;
    out.report.dual_residual = r_dual;
    out.report.status = converged ? "converged" : "max-iter";

    const auto [primal, dual] = certified_pair();
    out.report.primal_value = primal;
    out.report.perfect = primal >= 1.0 - opts.eps_perfect;
    out.report.dual_bound = dual;

    const double theta = mix_theta();
    ComplexMatrix part = ComplexMatrix::identity(dim);
    part *= theta / static_cast<double>(k_states);
    for (auto &m : x) {
        m *= (1.0 - theta);
        m += part;
    }
    out.povm.elements = std::move(x);
    return out;
}

SdpReport ppt_value(const DiscriminationInstance &instance, const SdpOptions &opts) {
    return ppt_solve(instance, opts).report;
}

bool PovmValidation::feasible(double eps_feas, double eps_psd) const {
    if (completeness_residual > eps_feas) return false;
    for (double v : min_eigenvalue)
        if (v < -eps_psd) return false;
    for (double v : min_pt_eigenvalue)
        if (v < -eps_psd) return false;
    return true;
}

PovmValidation validate_povm(const PovmCandidate &c, const DiscriminationInstance &instance,
                             const std::vector<double> &weights) {
    if (c.elements.size() != instance.num_states())
        throw std::invalid_argument("candidate element count does not match the instance");
    const std::vector<double> w = resolve_weights(weights, instance.num_states());
    const std::size_t dim = instance.shape.total();

    PovmValidation out;
    ComplexMatrix sum(dim, dim);
    for (std::size_t k = 0; k < c.elements.size(); ++k) {
        const ComplexMatrix &m = c.elements[k];
        instance.shape.check(m);
        if (m.hermitian_defect() > 1e-8)
            throw std::invalid_argument("candidate element is not Hermitian");
        sum += m;
        out.min_eigenvalue.push_back(min_eigenvalue(m.symmetrized()));
        out.min_pt_eigenvalue.push_back(min_eigenvalue(
            partial_transpose(m.symmetrized(), instance.shape, Side::left)));
        out.success_value += w[k] * real_inner(instance.rho[k], m);
    }
    sum -= ComplexMatrix::identity(dim);
    out.completeness_residual = sum.frobenius_norm();
    return out;
}

TraceBoundResult trace_bound_check(const PovmCandidate &c, const DiscriminationInstance &instance,
                                   std::size_t k, double eps, double eps_feas, double eps_psd) {
    if (k >= instance.num_states()) throw std::invalid_argument("state index out of range");
    if (eps < 0 || eps > 1) throw std::invalid_argument("success deficit must lie in [0, 1]");

    // The bound rests on the partial transpose of rho_k having spectrum
    // {1/2, 1/2, 1/2, -1/2}: rho_k must be the corner GHZ/Bell projector.
    const ComplexMatrix &rho = instance.rho[k];
    const std::size_t dim = instance.shape.total();
    const std::size_t lo = 0, hi = dim - 1;
    const double corner = rho(lo, hi).real();
    bool corner_bell = std::abs(rho(lo, lo).real() - 0.5) <= 1e-10 &&
                       std::abs(rho(hi, hi).real() - 0.5) <= 1e-10 &&
                       std::abs(std::abs(corner) - 0.5) <= 1e-10 &&
                       std::abs(rho(lo, hi).imag()) <= 1e-10;
    if (corner_bell) {
        for (std::size_t i = 0; i < dim && corner_bell; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                if ((i == lo || i == hi) && (j == lo || j == hi)) continue;
                if (std::abs(rho(i, j)) > 1e-10) {
                    corner_bell = false;
                    break;
                }
            }
    }
    if (!corner_bell)
        throw std::invalid_argument("trace-bound check requires a corner GHZ/Bell state");

    TraceBoundResult out;
    const PovmValidation validation = validate_povm(c, instance);
    out.ppt_feasible = validation.feasible(eps_feas, eps_psd);
    out.success = real_inner(rho, c.elements[k]);
    out.trace = c.elements[k].trace().real();
    out.bound = 2.0 * (1.0 - eps) - static_cast<double>(dim - 2) * eps_psd - 1e-9;
    out.pass = out.trace >= out.bound;
    return out;
}

}  // namespace nlw
