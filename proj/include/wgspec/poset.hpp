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

// Ranked poset on word pairs and its weighted incidence operator.
//
// (w, w') < (t, t') when r(w, w') < r(t, t'), every 1 of w is a 1 of t, and
// every 1 of t' is a 1 of w'. Covers raise the rank by one: set a 0 of the
// left word (sign +1) or clear a 1 of the right word (sign -1).
//
// B maps R^{|P_m|} to R^{2 |P_{m+1}|}; row block k holds sign * theta_atom
// for each cover, rows 2k and 2k+1 being the two theta components.

#include <cstddef>
#include <vector>

#include "wgspec/linalg.hpp"
#include "wgspec/model.hpp"

namespace wgspec {

enum class FlipSide { left, right };

struct CoveringEdge {
  std::size_t lower;  // index in the rank-m class
  std::size_t upper;  // index in the rank-(m+1) class
  int flip_atom;
  FlipSide side;
  int sign;  // +1 left, -1 right

  friend bool operator==(const CoveringEdge&, const CoveringEdge&) = default;
};

/// True when `lower` < `upper` in the poset order.
bool poset_less(const WordPair& lower, const WordPair& upper);

std::vector<CoveringEdge> covering_pairs(const RankClass& lower, const RankClass& upper);

struct IncidenceOperator {
  std::size_t upper_count = 0;
  std::size_t lower_count = 0;
  RMatrix dense;  // 2 * upper_count x lower_count
  std::vector<CoveringEdge> edges;

  std::size_t rows() const noexcept { return 2 * upper_count; }
  std::size_t cols() const noexcept { return lower_count; }
  RMatrix gram() const;
};

IncidenceOperator incidence_operator(const std::vector<CoveringEdge>& edges,
                                     const RankClass& lower, const RankClass& upper,
                                     const ModelParams& params);

/// B^T B accumulated edge-by-edge without materializing B.
RMatrix incidence_gram(const std::vector<CoveringEdge>& edges, std::size_t lower_count,
                       const ModelParams& params);

struct ReducedBlock;

struct DecompositionReport {
  int n_atoms = 0;
  int rank = 0;
  std::size_t class_size = 0;
  double max_a_minus_gram = 0.0;
  double max_q_plus_f_plus_gram = 0.0;
  double min_gram_eigenvalue = 0.0;
  double max_q_eigenvalue = 0.0;  // compare against -m/2
  bool identity_ok = false;
  bool trace_ok = false;
  bool psd_ok = false;
  bool bound_ok = false;

  bool passed() const noexcept { return identity_ok && trace_ok && psd_ok && bound_ok; }
};

inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kPsdTolerance = -1e-10;

/// Compares A with B^T B and Q with -F - B^T B. The block must carry its
/// incidence operator.
DecompositionReport verify_decomposition(const ReducedBlock& block);

}  // namespace wgspec
