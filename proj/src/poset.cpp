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

#include "wgspec/poset.hpp"

#include <algorithm>
#include <bit>

#include "wgspec/error.hpp"
#include "wgspec/reduction.hpp"

namespace wgspec {

bool poset_less(const WordPair& lower, const WordPair& upper) {
  if (lower.rank() >= upper.rank()) return false;
  const bool left_contained = (lower.left.mask() & ~upper.left.mask()) == 0;
  const bool right_contained = (upper.right.mask() & ~lower.right.mask()) == 0;
  return left_contained && right_contained;
}

std::vector<CoveringEdge> covering_pairs(const RankClass& lower, const RankClass& upper) {
  if (lower.n_atoms() != upper.n_atoms())
    fail(ErrorCode::invalid_input, "classes have different n_atoms");
  if (upper.rank() != lower.rank() + 1)
    fail(ErrorCode::invalid_input, "covering requires ranks m and m + 1");
  const int n = lower.n_atoms();
  std::vector<CoveringEdge> edges;
  edges.reserve(lower.size() * static_cast<std::size_t>(n - lower.rank()));
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const WordPair& p = lower[i];
    for (int k = 0; k < n; ++k) {
      if (!p.left.bit(k)) {
        const auto up = upper.index_of({p.left.flipped(k), p.right});
        if (!up) fail(ErrorCode::invalid_input, "cover missing from upper class");
        edges.push_back({i, *up, k, FlipSide::left, +1});
      }
      if (p.right.bit(k)) {
        const auto up = upper.index_of({p.left, p.right.flipped(k)});
        if (!up) fail(ErrorCode::invalid_input, "cover missing from upper class");
        edges.push_back({i, *up, k, FlipSide::right, -1});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const CoveringEdge& a, const CoveringEdge& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return edges;
}

IncidenceOperator incidence_operator(const std::vector<CoveringEdge>& edges,
                                     const RankClass& lower, const RankClass& upper,
                                     const ModelParams& params) {
  IncidenceOperator b;
  b.upper_count = upper.size();
  b.lower_count = lower.size();
  b.dense = RMatrix::Zero(static_cast<Eigen::Index>(b.rows()),
                          static_cast<Eigen::Index>(b.cols()));
  for (const auto& e : edges) {
    const ThetaVector t = theta(e.flip_atom, params);
    const auto row = static_cast<Eigen::Index>(2 * e.upper);
    const auto col = static_cast<Eigen::Index>(e.lower);
    b.dense(row, col) = e.sign * t.x;
    b.dense(row + 1, col) = e.sign * t.y;
  }
  b.edges = edges;
  return b;
}

RMatrix IncidenceOperator::gram() const { return dense.transpose() * dense; }

RMatrix incidence_gram(const std::vector<CoveringEdge>& edges, std::size_t lower_count,
                       const ModelParams& params) {
  const auto n = static_cast<Eigen::Index>(lower_count);
  RMatrix g = RMatrix::Zero(n, n);
  // Edges are sorted by lower index; group them by upper index instead.
  std::vector<const CoveringEdge*> by_upper;
  by_upper.reserve(edges.size());
  for (const auto& e : edges) by_upper.push_back(&e);
  std::sort(by_upper.begin(), by_upper.end(), [](const CoveringEdge* a, const CoveringEdge* b) {
    return a->upper != b->upper ? a->upper < b->upper : a->lower < b->lower;
  });
  for (std::size_t s = 0; s < by_upper.size();) {
    std::size_t t = s;
    while (t < by_upper.size() && by_upper[t]->upper == by_upper[s]->upper) ++t;
    for (std::size_t a = s; a < t; ++a) {
      const ThetaVector ta = theta(by_upper[a]->flip_atom, params);
      for (std::size_t c = s; c < t; ++c) {
        const ThetaVector tc = theta(by_upper[c]->flip_atom, params);
        g(static_cast<Eigen::Index>(by_upper[a]->lower),
          static_cast<Eigen::Index>(by_upper[c]->lower)) +=
            by_upper[a]->sign * by_upper[c]->sign * ta.dot(tc);
      }
    }
    s = t;
  }
  return g;
}

DecompositionReport verify_decomposition(const ReducedBlock& block) {
  if (!block.incidence)
    fail(ErrorCode::invalid_input, "block has no incidence operator attached");
  DecompositionReport r;
  r.n_atoms = block.cls.n_atoms();
  r.rank = block.rank();
  r.class_size = block.size();
  const RMatrix gram = block.incidence->rows() == 0
                           ? RMatrix::Zero(block.q_trace.rows(), block.q_trace.cols())
                           : block.incidence->gram();
  RMatrix f = block.f_diag.asDiagonal();
  // m = N has A = B = 0 by definition; the analytic diagonal (N - m)/2 is 0 too.
  r.max_a_minus_gram = max_abs(RMatrix(block.a_analytic - gram));
  r.max_q_plus_f_plus_gram = max_abs(RMatrix(block.q_trace + f + gram));
  const RVector ge = symmetric_eigenvalues(gram);
  r.min_gram_eigenvalue = ge.size() ? ge.minCoeff() : 0.0;
  const RVector qe = symmetric_eigenvalues(block.q_trace);
  r.max_q_eigenvalue = qe.size() ? qe.maxCoeff() : 0.0;
  r.identity_ok = r.max_a_minus_gram <= kIdentityTolerance;
  r.trace_ok = r.max_q_plus_f_plus_gram <= kIdentityTolerance;
  r.psd_ok = r.min_gram_eigenvalue >= kPsdTolerance;
  r.bound_ok = r.max_q_eigenvalue <= -0.5 * r.rank + 1e-10;
  return r;
}

}  // namespace wgspec
