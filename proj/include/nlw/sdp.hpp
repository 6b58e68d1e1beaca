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

#ifndef NLW_SDP_HPP
#define NLW_SDP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nlw/bipartition.hpp"
#include "nlw/matrix.hpp"
#include "nlw/state.hpp"

namespace nlw {

/// State discrimination across one bipartition: K density matrices on a
/// bipartite space, drawn with uniform priors.
struct DiscriminationInstance {
    BipartiteShape shape;
    std::vector<ComplexMatrix> rho;

    std::size_t num_states() const { return rho.size(); }

    /// Validates each rho: Hermitian, PSD and unit trace within 1e-10.
    static DiscriminationInstance checked(BipartiteShape shape, std::vector<ComplexMatrix> rho);
};

/// Rank-1 instance from a state set flattened across a bipartition;
/// `subset` selects state indices (empty means all, order preserved).
DiscriminationInstance make_instance(const StateSet &set, const Bipartition &b,
                                     const std::vector<std::size_t> &subset = {});

struct PovmCandidate {
    std::vector<ComplexMatrix> elements;
};

struct SdpOptions {
    double eps_feas = 1e-7;     // completeness residual allowance
    double eps_psd = 1e-8;      // min-eigenvalue slack allowance
    double eps_perfect = 1e-6;  // "perfect discrimination" threshold
    double eps_conv = 1e-9;     // residual target for convergence
    double eps_gap = 1e-7;      // certified duality-gap target (checked periodically)
    std::size_t max_iters = 50000;
    double sigma = 0.5;              // splitting penalty
    double relaxation = 1.6;         // over-relaxation factor in (0, 2)
    bool adapt_sigma = true;         // residual-balancing penalty updates
    std::vector<double> weights;     // per-state objective weights; empty = uniform 1/K
};

struct SdpReport {
    double primal_value = 0;  // best achievable weighted success probability
    double dual_bound = 0;    // certified upper bound on the optimum
    std::size_t iterations = 0;
    double primal_residual = 0;
    double dual_residual = 0;
    std::string status;  // converged | max-iter
    bool perfect = false;
};

struct SdpSolution {
    SdpReport report;
    PovmCandidate povm;  // final iterate; completeness holds exactly
};

/// Best weighted success probability sum_k w_k <psi_k|M_k|psi_k> over
/// measurements with M_k and their left partial transposes all PSD, summing
/// to the identity. Solved by consensus splitting with PSD projections; the
/// dual bound comes from an explicitly feasible dual point, so it upper-bounds
/// the true optimum no matter how early the iteration stopped (derivation in
/// docs/dual-bound.md).
SdpSolution ppt_solve(const DiscriminationInstance &instance, const SdpOptions &opts = {});
SdpReport ppt_value(const DiscriminationInstance &instance, const SdpOptions &opts = {});

struct PovmValidation {
    double completeness_residual = 0;       // ||sum M_k - I||_F
    std::vector<double> min_eigenvalue;     // per element
    std::vector<double> min_pt_eigenvalue;  // per element, left partial transpose
    double success_value = 0;               // weighted success probability

    bool feasible(double eps_feas = 1e-7, double eps_psd = 1e-8) const;
};

PovmValidation validate_povm(const PovmCandidate &c, const DiscriminationInstance &instance,
                             const std::vector<double> &weights = {});

struct TraceBoundResult {
    bool pass = false;       // trace >= bound
    double trace = 0;        // measured Tr(M_k)
    double bound = 0;        // 2(1 - eps) minus the PSD-slack allowance
    double success = 0;      // measured Tr(rho_k M_k)
    bool ppt_feasible = false;
};

/// For a maximally entangled corner state psi_k: any PPT POVM that succeeds on
/// it with probability >= 1 - eps must spend trace weight Tr(M_k) >= 2(1-eps),
/// up to the declared PSD slack. A candidate failing the bound cannot be PPT.
/// Requires rho_k to be the corner GHZ/Bell projector of the instance's shape.
TraceBoundResult trace_bound_check(const PovmCandidate &c, const DiscriminationInstance &instance,
                                   std::size_t k, double eps, double eps_feas = 1e-7,
                                   double eps_psd = 1e-8);

}  // namespace nlw

#endif
