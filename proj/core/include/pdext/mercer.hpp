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

#ifndef PDEXT_MERCER_HPP_
#define PDEXT_MERCER_HPP_

#include <vector>

#include <Eigen/Dense>

#include "pdext/bochner.hpp"
#include "pdext/interval.hpp"
#include "pdext/kernel.hpp"
#include "pdext/pd_function.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext {

/// Spectrum of a discretized integral operator on L2(Omega).
struct MercerDecomposition {
  GridSpec grid;
  Eigen::VectorXd eigenvalues;      // descending
  Eigen::MatrixXcd eigenfunctions;  // column k holds xi_k at the grid nodes

  double trace() const { return eigenvalues.sum(); }
  /// Eigenvalues above rel_tol * lambda_1.
  int rank(double rel_tol = 1e-10) const;
  /// sum_j w_j conj(xi_k) xi_l for the first `count` columns.
  Eigen::MatrixXcd gram(int count) const;
};

/// D^{1/2} K D^{1/2} with K_ij = F(x_i - x_j) and D the quadrature weights.
Eigen::MatrixXcd discretize(const PdFunction& f, const GridSpec& grid);
Eigen::MatrixXcd discretize(const Kernel& k, const GridSpec& grid);
/// Midpoint grid with n >= 16 nodes on (0, a).
Eigen::MatrixXcd discretize(const PdFunction& f, double a, int n);

/// Eigenvalues sorted descending, eigenfunctions D^{-1/2} v with the first
/// local extremum of each column made real and positive.
MercerDecomposition eigensystem(const Eigen::MatrixXcd& m, const GridSpec& grid);

/// Midpoint discretization on (0, a) followed by eigensystem.
MercerDecomposition mercer_decomposition(const PdFunction& f, double a, int n);
MercerDecomposition mercer_decomposition(const Kernel& k, const GridSpec& grid);

struct RankOneSplit {
  double residual;              // max |M_F2 - 2 M_E - M_L|
  double l_eigenvalue;          // positive nonzero eigenvalue of L
  double l_eigenvalue_negative; // the other nonzero eigenvalue
  double slope_ratio;           // b / a of the eigenfunction a + b x
};

/// F2(x - y) = 2 min(x, y) + (1 - x - y) on (0, 1/2) at the matrix level.
RankOneSplit rank_one_split(const GridSpec& grid);

struct OnbReport {
  Eigen::MatrixXcd gram;  // <sqrt(l_m) xi_m, sqrt(l_n) xi_n>_{H_F}
  double max_deviation;   // max |G - I|
};

/// H_F Gram of the scaled eigenfunctions through int conj(xi_m^) xi_n^ dmu.
OnbReport rkhs_onb(const MercerDecomposition& d, const SpectralMeasure& mu, int count,
                   const QuadratureSpec& q = {});
/// Same for the kernel min(x, y), whose inner product is
/// (1/2pi) int conj(g_m) g_n / lambda^2 with g = xi^(0) - xi^(lambda).
OnbReport rkhs_onb_brownian(const MercerDecomposition& d, int count, double radius = 400.0,
                            int nodes_per_unit = 32);

struct ProjectionReport {
  bool holds;
  double min_eigenvalue;  // of Q_N - P_N / lambda_1 on the top-N space
};

/// Q_N >= P_N / lambda_1; m is the matrix the decomposition came from.
ProjectionReport projection_bound(const Eigen::MatrixXcd& m, const MercerDecomposition& d,
                                  int n, double tol = 1e-9);

/// Phase of the Shannon kernel: analysis = exp(-i xi) sin xi / xi (the
/// Fourier image of the indicator of (0, 1)), synthesis = exp(i xi) sin xi / xi,
/// centered = sin xi / xi.
enum class ShannonPhase { analysis, synthesis, centered };

complex shannon_kernel(double xi, ShannonPhase phase);

/// f_n(x) = int Sha(pi (l - n)) exp(i 2 pi l x) dnu(l), nu the image of mu
/// under l -> l / (2 pi).
std::vector<complex> shannon_functions(const SpectralMeasure& mu, int n,
                                       const std::vector<double>& xs,
                                       ShannonPhase phase = ShannonPhase::analysis,
                                       const QuadratureSpec& q = {});

struct ShannonMembership {
  bool pass;
  double sup_error;
  int n_used;
  std::vector<double> errors;  // sup error after each N = 0..n_used
};

/// Lattice sums of the centered kernel against F rescaled to (-1, 1); xs are
/// in the coordinates of F.
ShannonMembership ext_membership_shannon(const PdFunction& f, const SpectralMeasure& mu,
                                         const std::vector<double>& xs, int n_max,
                                         double tol, const QuadratureSpec& q = {});

struct BesselReport {
  bool holds;
  std::vector<double> lhs;  // sum_n |<f_n, xi>_H|^2 per test vector
  std::vector<double> rhs;  // lambda_1 ||xi||_H^2 per test vector
};

/// fs: functions on the grid of d; tests: coefficients in the ONB
/// sqrt(l_k) xi_k.
BesselReport bessel_frame_bound(const MercerDecomposition& d,
                                const std::vector<Eigen::VectorXcd>& fs,
                                const std::vector<Eigen::VectorXcd>& tests,
                                double tol = 1e-9);

}  // namespace pdext

#endif  // PDEXT_MERCER_HPP_
