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

#include "wgspec/superoperator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wgspec/error.hpp"

namespace wgspec {

namespace {

void check_dense_cap(const ModelParams& params, int max_atoms, std::string_view what) {
  if (params.n_atoms() > max_atoms)
    fail(ErrorCode::capacity, std::string(what) + ": n_atoms " +
                                  std::to_string(params.n_atoms()) +
                                  " exceeds dense cap " + std::to_string(max_atoms));
}

}  // namespace

CMatrix lowering_operator(int n_atoms, int atom) {
  const Eigen::Index dim = Eigen::Index{1} << n_atoms;
  const std::uint32_t bit = atom_bit(n_atoms, atom);
  CMatrix s = CMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b)
    if (static_cast<std::uint32_t>(b) & bit) s(b ^ bit, b) = 1.0;
  return s;
}

OperatorSet build_operators(const ModelParams& params, int max_atoms) {
  check_dense_cap(params, max_atoms, "build_operators");
  const int n = params.n_atoms();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Complex i1{0.0, 1.0};

  std::vector<CMatrix> sigma;
  sigma.reserve(n);
  for (int j = 0; j < n; ++j) sigma.push_back(lowering_operator(n, j));

  OperatorSet ops;
  ops.drive = CMatrix::Zero(dim, dim);
  ops.jump_left = CMatrix::Zero(dim, dim);
  ops.jump_right = CMatrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    ops.drive -= params.rabi() * (sigma[j].adjoint() + sigma[j]);
    ops.jump_left += std::polar(1.0, params.phase(j)) * sigma[j];
    ops.jump_right += std::polar(1.0, -params.phase(j)) * sigma[j];
  }

  // -(i gamma / 2) sum_{j != l} (e^{i|phi_j - phi_l|} s_j^+ s_l - h.c.)
  CMatrix hop = CMatrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      if (j != l)
        hop += std::polar(1.0, std::abs(params.phase(j) - params.phase(l))) *
               (sigma[j].adjoint() * sigma[l]);
  ops.coupling = (-0.5 * params.gamma() * i1) * (hop - CMatrix(hop.adjoint()));

  if (params.extra_coupling()) {
    CMatrix h = CMatrix::Zero(dim, dim);
    for (int j = 0; j + 1 < n; ++j) {
      const CMatrix t = sigma[j].adjoint() * sigma[j + 1];
      h += t + CMatrix(t.adjoint());
    }
    ops.extra = *params.extra_coupling() * h;
  }
  return ops;
}

CMatrix OperatorSet::interaction(const ModelParams& params) const {
  CMatrix h = CMatrix::Zero(drive.rows(), drive.cols());
  if (params.include_interaction()) h += coupling;
  if (extra) h += *extra;
  return h;
}

CMatrix OperatorSet::hamiltonian(const ModelParams& params) const {
  return drive + interaction(params);
}

RMatrix x_basis_transform(int n_atoms) {
  const Eigen::Index dim = Eigen::Index{1} << n_atoms;
  RMatrix u(dim, dim);
  const double norm = std::pow(M_SQRT1_2, n_atoms);
  // <b|w> = prod_j <b_j|w_j>; <g|x> = 1, <e|1> = 1, <e|0> = -1.
  for (Eigen::Index b = 0; b < dim; ++b)
    for (Eigen::Index w = 0; w < dim; ++w) {
      const auto excited_in_zero =
          std::popcount(static_cast<std::uint32_t>(b & ~w));
      u(b, w) = (excited_in_zero % 2 ? -norm : norm);
    }
  return u;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix commutator_superoperator(const CMatrix& h) {
  const CMatrix id = CMatrix::Identity(h.rows(), h.cols());
  const Complex i1{0.0, 1.0};
  return -i1 * (kron(id, h) - kron(h.transpose(), id));
}

CMatrix dissipator_superoperator(const CMatrix& jump) {
  const CMatrix id = CMatrix::Identity(jump.rows(), jump.cols());
  const CMatrix k = jump.adjoint() * jump;
  return kron(jump.conjugate(), jump) - 0.5 * kron(id, k) - 0.5 * kron(k.transpose(), id);
}

CMatrix vectorize(const CMatrix& rho) {
  return rho.reshaped(rho.size(), 1);
}

CMatrix unvectorize(const CMatrix& v, Eigen::Index dim) {
  if (v.size() != dim * dim) fail(ErrorCode::invalid_input, "vector size mismatch");
  return v.reshaped(dim, dim);
}

LiouvillianMatrix build_liouvillian(const OperatorSet& ops, const ModelParams& params) {
  if (params.n_atoms() > kMaxLiouvillianAtoms)
    fail(ErrorCode::capacity,
         "full Liouvillian limited to n_atoms <= " +
             std::to_string(kMaxLiouvillianAtoms) +
             " (4096^2 dense); use projected mode for larger arrays");
  const Eigen::Index dim = Eigen::Index{1} << params.n_atoms();
  if (ops.drive.rows() != dim)
    fail(ErrorCode::invalid_input, "operator set does not match params");
  CMatrix l = commutator_superoperator(ops.hamiltonian(params));
  l += params.gamma() * dissipator_superoperator(ops.jump_left);
  l += params.gamma() * dissipator_superoperator(ops.jump_right);
  return {std::move(l), params};
}

std::string_view to_string(SpectrumSource s) {
  return s == SpectrumSource::full ? "full" : "projected";
}

SpectrumPoint classify(Complex lambda, double rabi, SpectrumSource source) {
  SpectrumPoint p{lambda, 0, 0.0, source};
  if (rabi > 0.0) {
    const double x = lambda.imag() / (2.0 * rabi);
    p.branch = static_cast<int>(std::lround(x));
    p.residue = std::abs(x - p.branch);
  }
  return p;
}

void sort_spectrum(std::vector<SpectrumPoint>& points) {
  std::sort(points.begin(), points.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.branch != b.branch) return a.branch < b.branch;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

std::vector<SpectrumPoint> full_spectrum(const LiouvillianMatrix& liouv) {
  const auto values = general_eigenvalues(liouv.entries);
  std::vector<SpectrumPoint> points;
  points.reserve(values.size());
  for (const auto& v : values)
    points.push_back(classify(v, liouv.params.rabi(), SpectrumSource::full));
  sort_spectrum(points);
  return points;
}

}  // namespace wgspec
