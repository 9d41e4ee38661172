// Copyright 2026 The pdext Authors
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

#ifndef PDEXT_LINALG_HPP_
#define PDEXT_LINALG_HPP_

#include <Eigen/Dense>

namespace pdext {

/// Eigenvalues in ascending order with matching eigenvector columns.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

// Dense drivers backed by LAPACK divide and conquer. Only the upper triangle
// is read. Throws NumericError when the driver reports failure.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m, bool with_vectors = true);
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m, bool with_vectors = true);

/// Ascending eigenvalues of a Hermitian matrix; takes the real path when the
/// imaginary part vanishes identically.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// True when every entry has an exactly zero imaginary part.
bool is_real(const Eigen::MatrixXcd& m);

}  // namespace pdext

#endif  // PDEXT_LINALG_HPP_
