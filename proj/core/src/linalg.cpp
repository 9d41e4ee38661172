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

#include "pdext/linalg.hpp"

#include <lapacke.h>

#include <string>

#include "pdext/errors.hpp"

namespace pdext {

namespace {

void require_square(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw ArgumentError("eigen: matrix is not square");
}

}  // namespace

bool is_real(const Eigen::MatrixXcd& m) {
  return (m.imag().array() == 0.0).all();
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m, bool with_vectors) {
  require_square(m.rows(), m.cols());
  SymmetricEigen out;
  const lapack_int n = static_cast<lapack_int>(m.rows());
  out.values.resize(n);
  if (n == 0) return out;
  Eigen::MatrixXd a = m;
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'U', n,
                     a.data(), n, out.values.data());
  if (info != 0) {
    throw NumericError("dsyevd failed with info " + std::to_string(info));
  }
  if (with_vectors) out.vectors = std::move(a);
  return out;
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m, bool with_vectors) {
  require_square(m.rows(), m.cols());
  HermitianEigen out;
  const lapack_int n = static_cast<lapack_int>(m.rows());
  out.values.resize(n);
  if (n == 0) return out;
  if (is_real(m)) {
    SymmetricEigen r = symmetric_eigen(m.real(), with_vectors);
    out.values = std::move(r.values);
    if (with_vectors) out.vectors = r.vectors.cast<std::complex<double>>();
    return out;
  }
  Eigen::MatrixXcd a = m;
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, with_vectors ? 'V' : 'N', 'U', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      out.values.data());
  if (info != 0) {
    throw NumericError("zheevd failed with info " + std::to_string(info));
  }
  if (with_vectors) out.vectors = std::move(a);
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  return hermitian_eigen(m, false).values;
}

}  // namespace pdext
