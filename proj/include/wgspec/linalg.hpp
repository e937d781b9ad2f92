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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace wgspec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

/// All eigenvalues of a general complex square matrix (LAPACK zgeev).
/// The matrix is taken by value because the solver overwrites it.
/// Throws Error(numeric) with norm diagnostics when the QR iteration fails.
std::vector<Complex> general_eigenvalues(CMatrix a);

/// Ascending eigenvalues of a real symmetric matrix.
RVector symmetric_eigenvalues(const RMatrix& a);

/// Descending singular values.
RVector singular_values(const RMatrix& a);

double max_abs(const RMatrix& a);
double max_abs(const CMatrix& a);

/// Sets the BLAS worker count for the calling process. Scans pin this to 1
/// so results do not depend on BLAS-internal reduction order.
void set_blas_threads(int n);
int blas_threads();

}  // namespace wgspec
