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

#include "wgspec/linalg.hpp"

#include <lapacke.h>

#include <sstream>

#include "wgspec/error.hpp"

extern "C" {
void openblas_set_num_threads(int num_threads);
int openblas_get_num_threads(void);
}

namespace wgspec {

std::vector<Complex> general_eigenvalues(CMatrix a) {
  if (a.rows() != a.cols()) fail(ErrorCode::invalid_input, "matrix is not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  std::vector<Complex> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  if (!a.allFinite()) fail(ErrorCode::numeric, "matrix has non-finite entries");
  const double frob = a.norm();
  const double peak = a.cwiseAbs().maxCoeff();
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(a.data()),
      n, reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr, 1);
  if (info != 0) {
    std::ostringstream msg;
    msg << "zgeev failed (info=" << info << ") on " << n << "x" << n
        << " matrix; frobenius norm " << frob << ", max |entry| " << peak;
    fail(ErrorCode::numeric, msg.str());
  }
  return w;
}

RVector symmetric_eigenvalues(const RMatrix& a) {
  if (a.rows() == 0) return RVector{};
  Eigen::SelfAdjointEigenSolver<RMatrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::numeric, "symmetric eigensolver did not converge");
  return es.eigenvalues();
}

RVector singular_values(const RMatrix& a) {
  if (a.size() == 0) return RVector{};
  Eigen::BDCSVD<RMatrix> svd(a);
  return svd.singularValues();
}

double max_abs(const RMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const CMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

void set_blas_threads(int n) { openblas_set_num_threads(n < 1 ? 1 : n); }
int blas_threads() { return openblas_get_num_threads(); }

}  // namespace wgspec
