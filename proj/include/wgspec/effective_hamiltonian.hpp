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

// Fixed-weight restriction of c_L^dag c_L (the effective non-Hermitian
// Hamiltonian H_L = -i c_L^dag c_L) and its diagonal-plus-Laplacian split
//   Q~ = F~ + B~^T B~,   F~_w = |a_w|^2 / 4 + (2 s - N) / 4,
// where B~ maps weight-s words to weight-(s+1) words with entry theta_k
// when the upper word sets bit k of the lower one.

#include <string_view>
#include <vector>

#include "wgspec/linalg.hpp"
#include "wgspec/model.hpp"

namespace wgspec {

struct TildeBlock {
  int n_atoms = 0;
  int sector = 0;  // s_w; J_x = s_w - N/2
  std::vector<BinaryWord> words;
  RMatrix q_tilde;
  RVector f_tilde;
  RMatrix b_tilde;  // 2 |W_{s+1}| x |W_s|; empty for s = N
  RVector psi0;
};

/// Closed-form matrix over the weight-s words (ascending mask order).
RMatrix reduced_quadratic_form(const ModelParams& params, int s);

TildeBlock build_tilde_block(const ModelParams& params, int s);

struct TildeReport {
  int n_atoms = 0;
  int sector = 0;
  double max_residual = 0.0;       // max |Q~ - F~ - B~^T B~|
  double max_gram_diag_error = 0.0;  // vs (N - s)/2
  double min_f = 0.0;
  double min_q_eigenvalue = 0.0;
  double lower_bound = 0.0;  // (2 s - N)/4
  bool decomposition_ok = false;
  bool diag_ok = false;
  bool bound_ok = false;  // only asserted for s >= N/2

  bool passed() const noexcept { return decomposition_ok && diag_ok && bound_ok; }
};

TildeReport tilde_decomposition(const TildeBlock& block);

/// Product-formula candidate kernel vector, unnormalized. An empty product
/// contributes 1.
RVector kernel_vector(const ModelParams& params, int s);

enum class KernelVerdict { confirms, refutes, inapplicable };
std::string_view to_string(KernelVerdict v);

struct KernelAudit {
  int n_atoms = 0;
  int sector = 0;
  int kernel_dimension = 0;
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  double psi0_norm = 0.0;
  double residual = 0.0;  // |Q~ psi0| / |psi0|, 0 when psi0 vanishes
  bool non_generic = false;
  KernelVerdict verdict = KernelVerdict::inapplicable;
  // kernel dimension 1 with nonzero psi0 must come with a small residual
  bool consistent = true;
};

inline constexpr double kKernelRelativeTolerance = 1e-9;
inline constexpr double kKernelResidualLimit = 1e-8;

KernelAudit kernel_audit(const ModelParams& params, int s,
                         double tol = kKernelRelativeTolerance);

}  // namespace wgspec
