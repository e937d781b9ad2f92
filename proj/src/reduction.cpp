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

#include "wgspec/reduction.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "wgspec/error.hpp"

namespace wgspec {

namespace {

constexpr double kImaginaryResidueLimit = 1e-10;

void check_block_cap(const RankClass& cls) {
  if (cls.n_atoms() > kMaxReductionAtoms)
    fail(ErrorCode::capacity, "reduction limited to n_atoms <= " +
                                  std::to_string(kMaxReductionAtoms));
  if (cls.size() > kMaxDenseBlock)
    fail(ErrorCode::capacity, "rank-" + std::to_string(cls.rank()) + " class of size " +
                                  std::to_string(cls.size()) + " exceeds dense block cap " +
                                  std::to_string(kMaxDenseBlock));
}

bool exactly(std::uint32_t mask, std::uint32_t want) { return mask == want; }

}  // namespace

PairRelation PairRelation::of(const WordPair& a, const WordPair& b) {
  return {a.left.mask() ^ b.left.mask(), a.right.mask() ^ b.right.mask(), a.left.size()};
}

bool PairRelation::chi(int i, int j) const {
  return exactly(left_diff, atom_bit(n_atoms, i)) && exactly(right_diff, atom_bit(n_atoms, j));
}

bool PairRelation::xi(int i, int j) const {
  return i != j && right_diff == 0 &&
         exactly(left_diff, atom_bit(n_atoms, i) | atom_bit(n_atoms, j));
}

bool PairRelation::xi_prime(int i, int j) const {
  return i != j && left_diff == 0 &&
         exactly(right_diff, atom_bit(n_atoms, i) | atom_bit(n_atoms, j));
}

XBasisOperators x_basis_operators(const ModelParams& params) {
  const OperatorSet ops = build_operators(params, kMaxReductionAtoms);
  const CMatrix u = x_basis_transform(params.n_atoms()).cast<Complex>();
  const CMatrix ut = u.transpose();
  XBasisOperators x;
  x.jump_left = ut * ops.jump_left * u;
  x.jump_right = ut * ops.jump_right * u;
  x.decay = x.jump_left.adjoint() * x.jump_left + x.jump_right.adjoint() * x.jump_right;
  x.interaction = ut * ops.interaction(params) * u;
  return x;
}

RMatrix dissipator_trace_matrix(const RankClass& cls, const ModelParams& params) {
  check_block_cap(cls);
  return dissipator_trace_matrix(cls, x_basis_operators(params));
}

RMatrix dissipator_trace_matrix(const RankClass& cls, const XBasisOperators& ops) {
  check_block_cap(cls);
  const auto& pairs = cls.pairs();
  const std::size_t n = pairs.size();
  RMatrix q(n, n);
  double worst_imag = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = pairs[j].left.mask();
    const auto vp = pairs[j].right.mask();
    for (std::size_t i = 0; i < n; ++i) {
      const auto w = pairs[i].left.mask();
      const auto wp = pairs[i].right.mask();
      // <w| D(|v><v'|) |w'> summed over both jump operators.
      Complex e = ops.jump_left(w, v) * std::conj(ops.jump_left(wp, vp)) +
                  ops.jump_right(w, v) * std::conj(ops.jump_right(wp, vp));
      if (wp == vp) e -= 0.5 * ops.decay(w, v);
      if (w == v) e -= 0.5 * std::conj(ops.decay(wp, vp));
      worst_imag = std::max(worst_imag, std::abs(e.imag()));
      q(i, j) = e.real();
    }
  }
  if (worst_imag > kImaginaryResidueLimit)
    fail(ErrorCode::convention,
         "dissipator trace matrix has imaginary residue " + std::to_string(worst_imag) +
             "; basis or adjoint convention is inconsistent");
  return q;
}

AnalyticBlocks analytic_blocks(const RankClass& cls, const ModelParams& params) {
  check_block_cap(cls);
  const int n_atoms = cls.n_atoms();
  if (n_atoms != params.n_atoms())
    fail(ErrorCode::invalid_input, "class and params disagree on n_atoms");
  const int m = cls.rank();
  const auto& pairs = cls.pairs();
  const std::size_t n = pairs.size();

  std::vector<std::complex<double>> amp(n);
  AnalyticBlocks out{RVector(n), RMatrix::Zero(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = word_stats(pairs[i].left, params).amplitude -
                   word_stats(pairs[i].right, params).amplitude;
    out.f(i) = 0.25 * std::norm(a) + 0.5 * m;
    out.a(i, i) = 0.5 * (n_atoms - m);
  }

  const auto cosd = [&](int i, int j) {
    return std::cos(params.phase(i) - params.phase(j));
  };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const auto rel = PairRelation::of(pairs[r], pairs[c]);
      if (std::popcount(rel.left_diff) + std::popcount(rel.right_diff) != 2) continue;
      double sum = 0.0;
      for (int i = 0; i < n_atoms; ++i) {
        for (int j = 0; j < n_atoms; ++j) {
          if (rel.chi(i, j)) sum -= cosd(i, j);
          // xi and xi' are symmetric in (i, j); count each unordered pair once.
          if (i < j && (rel.xi(i, j) || rel.xi_prime(i, j))) sum += cosd(i, j);
        }
      }
      out.a(r, c) = out.a(c, r) = 0.5 * sum;
    }
  }
  return out;
}

CMatrix interaction_block(const RankClass& cls, const XBasisOperators& ops) {
  check_block_cap(cls);
  const auto& pairs = cls.pairs();
  const std::size_t n = pairs.size();
  const Complex i1{0.0, 1.0};
  CMatrix k(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = pairs[j].left.mask();
    const auto vp = pairs[j].right.mask();
    for (std::size_t i = 0; i < n; ++i) {
      const auto w = pairs[i].left.mask();
      const auto wp = pairs[i].right.mask();
      Complex e{0.0, 0.0};
      if (wp == vp) e += ops.interaction(w, v);
      if (w == v) e -= ops.interaction(vp, wp);
      k(i, j) = -i1 * e;
    }
  }
  return k;
}

ReducedBlock build_reduced_block(const RankClass& cls, const ModelParams& params,
                                 bool with_incidence) {
  return build_reduced_block(cls, params, x_basis_operators(params), with_incidence);
}

ReducedBlock build_reduced_block(const RankClass& cls, const ModelParams& params,
                                 const XBasisOperators& ops, bool with_incidence) {
  auto analytic = analytic_blocks(cls, params);
  ReducedBlock block{cls,
                     dissipator_trace_matrix(cls, ops),
                     std::move(analytic.f),
                     std::move(analytic.a),
                     interaction_block(cls, ops),
                     std::nullopt};
  if (with_incidence) {
    if (cls.rank() == cls.n_atoms()) {
      IncidenceOperator b;
      b.lower_count = cls.size();
      b.dense = RMatrix::Zero(0, static_cast<Eigen::Index>(cls.size()));
      block.incidence = std::move(b);
    } else {
      const RankClass upper = enumerate_rank_class(cls.n_atoms(), cls.rank() + 1);
      block.incidence = incidence_operator(covering_pairs(cls, upper), cls, upper, params);
    }
  }
  return block;
}

CMatrix ReducedBlock::generator(const ModelParams& params) const {
  CMatrix g = params.gamma() * q_trace.cast<Complex>() + interaction_block;
  g.diagonal().array() += Complex{0.0, 2.0 * rank() * params.rabi()};
  return g;
}

std::vector<SpectrumPoint> projected_block_spectrum(const ReducedBlock& block,
                                                    const ModelParams& params) {
  std::vector<SpectrumPoint> out;
  for (const auto& v : general_eigenvalues(block.generator(params)))
    out.push_back({v, block.rank(), 0.0, SpectrumSource::projected});
  return out;
}

std::vector<SpectrumPoint> projected_spectrum(const ModelParams& params) {
  const XBasisOperators ops = x_basis_operators(params);
  std::vector<SpectrumPoint> out;
  for (int m = 0; m <= params.n_atoms(); ++m) {
    const RankClass cls = enumerate_rank_class(params.n_atoms(), m);
    const ReducedBlock block = build_reduced_block(cls, params, ops, false);
    for (const auto& p : projected_block_spectrum(block, params)) {
      out.push_back(p);
      if (m > 0) out.push_back({std::conj(p.value), -m, 0.0, SpectrumSource::projected});
    }
  }
  sort_spectrum(out);
  return out;
}

}  // namespace wgspec
