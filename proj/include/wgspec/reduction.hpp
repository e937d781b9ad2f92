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

// Strong-drive projection onto a fixed-rank word-pair class.
//
// Block generator for branch m (m >= 0):
//   2 i m Omega * 1 + gamma * Q + P(-i[H_II + H_J, .])
// with Q_ij = Tr(rho_i^dagger (D[c_L] + D[c_R]) rho_j) over the canonical
// class order. Couplings between different ranks are dropped. Negative
// branches are the complex conjugates of branch |m|.

#include <cstddef>
#include <optional>
#include <vector>

#include "wgspec/linalg.hpp"
#include "wgspec/model.hpp"
#include "wgspec/poset.hpp"
#include "wgspec/superoperator.hpp"

namespace wgspec {

inline constexpr int kMaxReductionAtoms = 8;
inline constexpr std::size_t kMaxDenseBlock = 4096;

/// Bit-difference predicates between two word pairs rho = (w, w') and
/// rho' = (v, v'), atom indices 0-based.
struct PairRelation {
  std::uint32_t left_diff;   // w xor v
  std::uint32_t right_diff;  // w' xor v'
  int n_atoms;

  static PairRelation of(const WordPair& a, const WordPair& b);

  /// Left words differ exactly at i and right words exactly at j.
  bool chi(int i, int j) const;
  /// Left words differ exactly at {i, j} (i != j), right words equal.
  bool xi(int i, int j) const;
  /// Right words differ exactly at {i, j} (i != j), left words equal.
  bool xi_prime(int i, int j) const;
};

struct AnalyticBlocks {
  RVector f;  // F_rho = |a_w - a_w'|^2 / 4 + m / 2
  RMatrix a;  // off-diagonal from the cosine sum, diagonal (N - m) / 2
};

struct ReducedBlock {
  RankClass cls;
  RMatrix q_trace;
  RVector f_diag;
  RMatrix a_analytic;
  CMatrix interaction_block;
  std::optional<IncidenceOperator> incidence;

  int rank() const noexcept { return cls.rank(); }
  std::size_t size() const noexcept { return cls.size(); }
  /// 2 i m Omega + gamma Q + projected interaction.
  CMatrix generator(const ModelParams& params) const;
};

/// Operators rotated into the x-basis words used by the projection.
struct XBasisOperators {
  CMatrix jump_left;
  CMatrix jump_right;
  CMatrix decay;        // c_L^dag c_L + c_R^dag c_R
  CMatrix interaction;  // H_II (if enabled) + extra coupling
};

XBasisOperators x_basis_operators(const ModelParams& params);

/// Trace route: Hilbert-Schmidt pairing of the dissipators on the class.
/// Throws Error(convention) if an entry carries an imaginary part > 1e-10.
RMatrix dissipator_trace_matrix(const RankClass& cls, const ModelParams& params);
RMatrix dissipator_trace_matrix(const RankClass& cls, const XBasisOperators& ops);

/// Closed-form route for F and A.
AnalyticBlocks analytic_blocks(const RankClass& cls, const ModelParams& params);

/// Projection of -i[H_II + H_J, .] onto the class (anti-Hermitian).
CMatrix interaction_block(const RankClass& cls, const XBasisOperators& ops);

/// Assembles every block field. The incidence operator is attached when
/// with_incidence is set (requires the rank m + 1 class).
ReducedBlock build_reduced_block(const RankClass& cls, const ModelParams& params,
                                 bool with_incidence = true);
ReducedBlock build_reduced_block(const RankClass& cls, const ModelParams& params,
                                 const XBasisOperators& ops, bool with_incidence);

std::vector<SpectrumPoint> projected_block_spectrum(const ReducedBlock& block,
                                                    const ModelParams& params);

/// Projected spectrum over every branch -N..N, sorted like full_spectrum.
std::vector<SpectrumPoint> projected_spectrum(const ModelParams& params);

}  // namespace wgspec
