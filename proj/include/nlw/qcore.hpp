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

#ifndef NLW_QCORE_HPP
#define NLW_QCORE_HPP

#include <stdexcept>
#include <vector>

#include "nlw/matrix.hpp"

namespace nlw {

/// Thrown when an operation would produce an operator larger than the
/// configured dimension cap.
struct dim_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Global cap on operator dimensions produced by kron (default 2^13).
/// Intended to be set once at startup (e.g. from the NLW_DIM_CAP env var).
std::size_t dim_cap();
void set_dim_cap(std::size_t cap);

enum class Side { left, right };

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Transpose on one tensor factor. Involutive; preserves trace, Frobenius
/// norm and Hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix &a, const BipartiteShape &shape, Side side);

/// Trace out one tensor factor, keeping the other.
ComplexMatrix partial_trace(const ComplexMatrix &a, const BipartiteShape &shape, Side keep);

struct EigDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Deterministic: identical inputs give identical outputs. The input must be
/// Hermitian within `herm_tol`; it is symmetrized before iterating.
EigDecomposition hermitian_eig(const ComplexMatrix &a, double herm_tol = 1e-10);

/// Nearest positive semidefinite matrix in Frobenius norm (eigenvalue clipping).
ComplexMatrix psd_project(const ComplexMatrix &a, double herm_tol = 1e-10);

double min_eigenvalue(const ComplexMatrix &a, double herm_tol = 1e-10);

/// Positive-semidefinite projection that seeds each diagonalization with the
/// previous call's eigenbasis, so projecting a slowly moving sequence of
/// matrices costs a rotation sweep or two instead of a full decomposition.
/// Output is PSD by construction for any seed.
class PsdProjector {
  public:
    explicit PsdProjector(std::size_t dim);
    ComplexMatrix project(const ComplexMatrix &a, double herm_tol = 1e-8);

  private:
    std::size_t dim_;
    bool warm_ = false;
    ComplexMatrix basis_;
};

}  // namespace nlw

#endif
