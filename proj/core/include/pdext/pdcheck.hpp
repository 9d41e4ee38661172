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

#ifndef PDEXT_PDCHECK_HPP_
#define PDEXT_PDCHECK_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdext/kernel.hpp"
#include "pdext/pd_function.hpp"

namespace pdext {

enum class GramVerdict { psd, indefinite };
std::string to_string(GramVerdict v);

struct GramReport {
  std::vector<double> points;
  Eigen::MatrixXcd matrix;
  Eigen::VectorXd eigenvalues;  // ascending
  double min_eigenvalue;
  double max_eigenvalue;
  GramVerdict verdict;
};

constexpr double kPsdTolerance = 1e-10;

/// M_ij = F(x_i - x_j); every difference must lie in the domain of F.
Eigen::MatrixXcd gram_matrix(const PdFunction& f, const std::vector<double>& points);
/// M_ij = K(x_i, x_j).
Eigen::MatrixXcd gram_matrix(const Kernel& k, const std::vector<double>& points);

/// psd iff min eigenvalue >= -tol * max(1, largest eigenvalue).
GramReport gram_report(std::vector<double> points, Eigen::MatrixXcd m,
                       double tol = kPsdTolerance);
GramReport is_pd_grid(const PdFunction& f, const std::vector<double>& points,
                      double tol = kPsdTolerance);
GramReport kernel_pd(const Kernel& k, const std::vector<double>& points,
                     double tol = kPsdTolerance);

struct DominationResult {
  bool holds;
  double minimal_a;  // infinite when Gram(K) has mass off the range of Gram(F)
};

/// K << F on the points: A Gram(F) - Gram(K) psd. Without A, the smallest
/// such A on the range of Gram(F).
DominationResult domination(const PdFunction& k, const PdFunction& f,
                            const std::vector<double>& points,
                            std::optional<double> a = std::nullopt);

struct PolyaReport {
  bool pass;
  std::vector<std::string> failures;
};

/// Samples f(0), f(h), ..., f(c) on a uniform grid.
PolyaReport polya_criterion(const std::vector<double>& samples, double spacing);

struct MonotoneReport {
  bool pass;
  int failed_order;   // 0 when passing
  int failed_anchor;  // -1 when passing
};

/// (-1)^k Delta^k q >= -tol for k = 1..max_order at every anchor.
MonotoneReport completely_monotone(const std::vector<double>& samples, int max_order,
                                   double tol = 1e-12);

}  // namespace pdext

#endif  // PDEXT_PDCHECK_HPP_
