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

// Independent reference computations used only by the tests. Nothing here
// calls the library's operator builders or projection code.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using CM = Eigen::MatrixXcd;

inline CM kron(const CM& a, const CM& b) {
  CM out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Single-site operator embedded at `atom` (atom 0 leftmost factor).
inline CM embed(const CM& op, int n, int atom) {
  CM out = CM::Identity(1, 1);
  for (int j = 0; j < n; ++j) out = kron(out, j == atom ? op : CM(CM::Identity(2, 2)));
  return out;
}

/// sigma = |g><e| on (|g>, |e>).
inline CM sigma2() {
  CM s = CM::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

/// Columns |0> = (g - e)/sqrt2, |1> = (g + e)/sqrt2, tensored.
inline CM x_rotation(int n) {
  CM u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << r, r, -r, r;
  CM out = CM::Identity(1, 1);
  for (int j = 0; j < n; ++j) out = kron(out, u);
  return out;
}

inline CM jump(int n, const std::vector<double>& phases, int sign) {
  const CM s = sigma2();
  CM c = CM::Zero(1 << n, 1 << n);
  for (int j = 0; j < n; ++j) c += std::polar(1.0, sign * phases[j]) * embed(s, n, j);
  return c;
}

inline CM dissipate(const CM& l, const CM& rho) {
  const CM ld = l.adjoint();
  return l * rho * ld - 0.5 * (ld * l * rho + rho * ld * l);
}

inline CM random_density_matrix(int dim, std::mt19937& rng) {
  std::normal_distribution<double> g;
  CM a(dim, dim);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = C(g(rng), g(rng));
  CM rho = a * a.adjoint();
  return rho / rho.trace();
}

inline std::vector<double> random_phases(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  std::vector<double> p(n);
  for (auto& v : p) v = u(rng);
  return p;
}

/// |w> as a 2^n column in the x-basis (mask index, atom 0 most significant).
inline CM ket(int n, unsigned mask) {
  CM v = CM::Zero(1 << n, 1);
  v(mask) = 1.0;
  return v;
}

}  // namespace oracle
