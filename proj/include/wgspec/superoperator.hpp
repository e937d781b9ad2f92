// Copyright 2026 The wgspec Authors
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

#pragma once

// Operators of the driven waveguide array on the 2^N Hilbert space, the
// column-stacked Liouvillian on 4^N, and its classified spectrum.
//
// Hilbert basis: tensor product over atoms with atom 0 as the most
// significant factor; single-atom order (|g>, |e>), sigma = |g><e|.
// Vectorization stacks columns: vec(A X B) = (B^T kron A) vec(X).
//
// Equation of motion, with gamma attached to each emission direction:
//   L rho = -i[H_I + H_II (+ H_J), rho] + gamma D[c_L] rho + gamma D[c_R] rho
// A single atom therefore decays at total rate 2*gamma.

#include <optional>
#include <string_view>
#include <vector>

#include "wgspec/linalg.hpp"
#include "wgspec/model.hpp"

namespace wgspec {

inline constexpr int kMaxOperatorAtoms = 7;
inline constexpr int kMaxLiouvillianAtoms = 6;

struct OperatorSet {
  CMatrix drive;       // H_I = -Omega sum_j (sigma_j^+ + sigma_j)
  CMatrix coupling;    // H_II, waveguide-mediated exchange
  CMatrix jump_left;   // c_L = sum_j e^{i phi_j} sigma_j
  CMatrix jump_right;  // c_R = sum_j e^{-i phi_j} sigma_j
  std::optional<CMatrix> extra;  // J sum_j (sigma_j^+ sigma_{j+1} + h.c.)

  /// H_I plus whichever of H_II and the extra coupling the params enable.
  CMatrix hamiltonian(const ModelParams& params) const;
  /// H_II and the extra coupling only (the part the drive projection keeps).
  CMatrix interaction(const ModelParams& params) const;
};

/// Lowering operator of one atom on the n-atom space.
CMatrix lowering_operator(int n_atoms, int atom);

OperatorSet build_operators(const ModelParams& params,
                            int max_atoms = kMaxOperatorAtoms);

/// Basis change from the g/e product basis to the x-basis words:
/// column w of the result is |w> in g/e coordinates, with
/// |0> = (|g> - |e>)/sqrt(2), |1> = (|g> + |e>)/sqrt(2).
RMatrix x_basis_transform(int n_atoms);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// -i[H, .] as a column-stacked superoperator.
CMatrix commutator_superoperator(const CMatrix& h);
/// D[L] as a column-stacked superoperator.
CMatrix dissipator_superoperator(const CMatrix& jump);

CMatrix vectorize(const CMatrix& rho);
CMatrix unvectorize(const CMatrix& v, Eigen::Index dim);

struct LiouvillianMatrix {
  CMatrix entries;
  ModelParams params;

  Eigen::Index dim() const noexcept { return entries.rows(); }
};

LiouvillianMatrix build_liouvillian(const OperatorSet& ops, const ModelParams& params);

enum class SpectrumSource { full, projected };

std::string_view to_string(SpectrumSource s);

struct SpectrumPoint {
  Complex value;
  int branch = 0;        // signed m
  double residue = 0.0;  // |Im/(2 Omega) - branch|; 0 for projected points
  SpectrumSource source = SpectrumSource::full;
};

inline constexpr double kBranchResidueLimit = 0.02;

/// Nearest-integer branch of Im(lambda)/(2 Omega); branch 0 when Omega = 0.
SpectrumPoint classify(Complex lambda, double rabi, SpectrumSource source);

/// Orders by (branch, Re descending, Im ascending).
void sort_spectrum(std::vector<SpectrumPoint>& points);

std::vector<SpectrumPoint> full_spectrum(const LiouvillianMatrix& liouv);

}  // namespace wgspec
