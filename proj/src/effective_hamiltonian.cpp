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

#include "wgspec/effective_hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "wgspec/error.hpp"

namespace wgspec {

namespace {

void check_sector(const ModelParams& params, int s) {
  if (params.n_atoms() > kMaxWordAtoms)
    fail(ErrorCode::capacity, "n_atoms exceeds word capacity");
  if (s < 0 || s > params.n_atoms())
    fail(ErrorCode::invalid_input, "sector must be in [0, n_atoms]");
}

int index_of(const std::vector<BinaryWord>& words, std::uint32_t mask) {
  auto it = std::lower_bound(words.begin(), words.end(), mask,
                             [](const BinaryWord& w, std::uint32_t m) { return w.mask() < m; });
  return it != words.end() && it->mask() == mask ? static_cast<int>(it - words.begin()) : -1;
}

}  // namespace

RMatrix reduced_quadratic_form(const ModelParams& params, int s) {
  check_sector(params, s);
  const int n = params.n_atoms();
  const auto words = words_of_weight(n, s);
  const auto size = static_cast<Eigen::Index>(words.size());
  RMatrix q = RMatrix::Zero(size, size);
  for (Eigen::Index a = 0; a < size; ++a) {
    const BinaryWord& w = words[a];
    double diag = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= j; ++k) {
        const double sign = (w.bit(j) == w.bit(k)) ? 1.0 : -1.0;
        diag += sign * std::cos(params.phase(j) - params.phase(k));
      }
    q(a, a) = 0.5 * diag;
    for (Eigen::Index b = a + 1; b < size; ++b) {
      const std::uint32_t diff = w.mask() ^ words[b].mask();
      if (std::popcount(diff) != 2) continue;
      int atoms[2];
      int found = 0;
      for (int j = 0; j < n; ++j)
        if (diff & atom_bit(n, j)) atoms[found++] = j;
      q(a, b) = q(b, a) = 0.5 * std::cos(params.phase(atoms[0]) - params.phase(atoms[1]));
    }
  }
  return q;
}

RVector kernel_vector(const ModelParams& params, int s) {
  check_sector(params, s);
  const int n = params.n_atoms();
  const auto words = words_of_weight(n, s);
  RVector psi(static_cast<Eigen::Index>(words.size()));
  for (std::size_t a = 0; a < words.size(); ++a) {
    double prod = 1.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < j; ++k) {
        if (words[a].bit(j) != words[a].bit(k)) continue;
        // (-1)^{w_j + j + k} with 1-based j, k has the same parity 0-based.
        const int parity = (static_cast<int>(words[a].bit(j)) + j + k) % 2;
        prod *= std::sin(params.phase(j) - params.phase(k)) * (parity ? -1.0 : 1.0);
      }
    psi(static_cast<Eigen::Index>(a)) = prod;
  }
  return psi;
}

TildeBlock build_tilde_block(const ModelParams& params, int s) {
  check_sector(params, s);
  const int n = params.n_atoms();
  TildeBlock t;
  t.n_atoms = n;
  t.sector = s;
  t.words = words_of_weight(n, s);
  t.q_tilde = reduced_quadratic_form(params, s);
  const auto size = static_cast<Eigen::Index>(t.words.size());
  t.f_tilde.resize(size);
  for (Eigen::Index a = 0; a < size; ++a)
    t.f_tilde(a) = 0.25 * std::norm(word_stats(t.words[a], params).amplitude) +
                   0.25 * (2 * s - n);
  const auto upper = words_of_weight(n, s + 1);
  t.b_tilde = RMatrix::Zero(2 * static_cast<Eigen::Index>(upper.size()), size);
  for (Eigen::Index a = 0; a < size; ++a)
    for (int k = 0; k < n; ++k) {
      if (t.words[a].bit(k)) continue;
      const int row = index_of(upper, t.words[a].mask() | atom_bit(n, k));
      const ThetaVector th = theta(k, params);
      t.b_tilde(2 * row, a) = th.x;
      t.b_tilde(2 * row + 1, a) = th.y;
    }
  t.psi0 = kernel_vector(params, s);
  return t;
}

TildeReport tilde_decomposition(const TildeBlock& block) {
  TildeReport r;
  r.n_atoms = block.n_atoms;
  r.sector = block.sector;
  const RMatrix gram = block.b_tilde.rows() == 0
                           ? RMatrix::Zero(block.q_tilde.rows(), block.q_tilde.cols())
                           : RMatrix(block.b_tilde.transpose() * block.b_tilde);
  r.max_residual = max_abs(RMatrix(block.q_tilde - RMatrix(block.f_tilde.asDiagonal()) - gram));
  const double want_diag = 0.5 * (block.n_atoms - block.sector);
  r.max_gram_diag_error =
      gram.rows() ? (gram.diagonal().array() - want_diag).abs().maxCoeff() : 0.0;
  r.min_f = block.f_tilde.size() ? block.f_tilde.minCoeff() : 0.0;
  const RVector qe = symmetric_eigenvalues(block.q_tilde);
  r.min_q_eigenvalue = qe.size() ? qe.minCoeff() : 0.0;
  r.lower_bound = 0.25 * (2 * block.sector - block.n_atoms);
  r.decomposition_ok = r.max_residual <= 1e-12;
  // theta_k . theta_k is 1/2 up to one rounding of cos^2 + sin^2.
  r.diag_ok = r.max_gram_diag_error <= 1e-14 * std::max(1.0, want_diag);
  r.bound_ok = 2 * block.sector < block.n_atoms || r.min_q_eigenvalue >= r.lower_bound - 1e-10;
  return r;
}

std::string_view to_string(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::confirms: return "confirms";
    case KernelVerdict::refutes: return "refutes";
    case KernelVerdict::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

KernelAudit kernel_audit(const ModelParams& params, int s, double tol) {
  check_sector(params, s);
  KernelAudit a;
  a.n_atoms = params.n_atoms();
  a.sector = s;
  const RMatrix q = reduced_quadratic_form(params, s);
  const RVector sv = singular_values(q);
  a.largest_singular_value = sv.size() ? sv(0) : 0.0;
  a.smallest_singular_value = sv.size() ? sv(sv.size() - 1) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) < tol * a.largest_singular_value) ++a.kernel_dimension;

  const int n = params.n_atoms();
  for (int j = 0; j < n && !a.non_generic; ++j)
    for (int k = 0; k < j; ++k)
      if (std::abs(std::sin(params.phase(j) - params.phase(k))) < 1e-8) {
        a.non_generic = true;
        break;
      }

  const RVector psi = kernel_vector(params, s);
  a.psi0_norm = psi.norm();
  if (a.psi0_norm <= 1e-12 * std::sqrt(static_cast<double>(psi.size()))) {
    a.verdict = KernelVerdict::inapplicable;
    a.residual = 0.0;
  } else {
    a.residual = (q * psi).norm() / a.psi0_norm;
    a.verdict = (a.kernel_dimension == 1 && a.residual <= kKernelResidualLimit)
                    ? KernelVerdict::confirms
                    : KernelVerdict::refutes;
    if (a.kernel_dimension == 1 && a.residual > kKernelResidualLimit) a.consistent = false;
  }
  return a;
}

}  // namespace wgspec
