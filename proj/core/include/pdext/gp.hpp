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

#ifndef PDEXT_GP_HPP_
#define PDEXT_GP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdext/kernel.hpp"
#include "pdext/pd_function.hpp"

namespace pdext {

/// Covariance of a real Gaussian process.
class CovKernel {
 public:
  enum class Id { bm, bridge, ou, fbm, from_pd };

  /// s ^ t.
  static CovKernel bm();
  /// s ^ t - s t with mean t (pinned at (0, 0) and (1, 1)).
  static CovKernel bridge();
  /// (1 / alpha) exp(-(alpha / 2) |s - t|).
  static CovKernel ou(double alpha = 1.0);
  static CovKernel fbm(double hurst);
  /// Re F(s - t).
  static CovKernel from_pd(const PdFunction& f);
  static CovKernel from_string(const std::string& spec);

  double operator()(double s, double t) const;
  double mean(double t) const;
  Id id() const { return id_; }
  std::string name() const;
  /// Same kernel viewed as a pdcheck Kernel.
  Kernel as_kernel() const;

 private:
  CovKernel(Id id, double param, std::optional<PdFunction> f);

  Id id_;
  double param_;
  std::optional<PdFunction> f_;
};

/// C_ij = k(t_i, t_j); times must increase strictly.
Eigen::MatrixXd cov_matrix(const CovKernel& k, const std::vector<double>& times);

/// Lower Cholesky factor with the jitter ladder {0, 1e-12, 1e-10, 1e-8} *
/// trace / n; NumericError past the last rung.
Eigen::MatrixXd jittered_cholesky(const Eigen::MatrixXd& c);

struct PathEnsemble {
  std::vector<double> times;
  Eigen::MatrixXd paths;  // one path per row
  std::uint64_t seed;
  std::string kernel_id;
  std::vector<double> mean;  // model mean at each time
};

/// m independent paths; path p draws from its own generator seeded by
/// (seed, p), so output does not depend on the thread count.
PathEnsemble sample_paths(const CovKernel& k, const std::vector<double>& times, int m,
                          std::uint64_t seed);

/// (1/m) sum (X - mean)(X - mean)^T about the model mean.
Eigen::MatrixXd empirical_covariance(const PathEnsemble& e);

struct CovarianceReport {
  double max_abs_error;
  double tolerance;  // 5 / sqrt(m)
  bool pass;
};

CovarianceReport compare_covariance(const Eigen::MatrixXd& empirical,
                                    const Eigen::MatrixXd& model, int m);

/// Times e^{alpha x} at which a Brownian ensemble must be sampled.
std::vector<double> ou_bm_times(const std::vector<double>& xs, double alpha = 2.0);

/// X(x) = e^{-x} B(e^{2x}) (covariance e^{-|x - y|}) when alpha is empty;
/// otherwise e^{-alpha x / 2} B(e^{alpha x}) / sqrt(alpha), the ou(alpha) law.
PathEnsemble ou_from_bm(const PathEnsemble& bm, const std::vector<double>& xs,
                        std::optional<double> alpha = std::nullopt);

struct ItoReport {
  double lhs;
  double rhs;
  double z_score;
};

/// Empirical E|sum f(t_i)(X_{t_i} - X_{t_{i-1}})|^2 over the ensemble times
/// against sum |f(t_i)|^2 (t_i - t_{i-1}).
ItoReport ito_isometry_check(const std::vector<double>& f_values, const PathEnsemble& bm);

struct PowerSeriesReport {
  int terms;
  std::vector<double> lambdas;
  std::vector<complex> empirical;
  std::vector<double> model;
  double sup_error;
};

/// X = sum_k omega_k a^k with fair signs; empirical E exp(i l X) against
/// prod cos(a^k l).
PowerSeriesReport random_power_series_charfn(double a, int m, const std::vector<double>& lambdas,
                                             std::uint64_t seed = 1);

}  // namespace pdext

#endif  // PDEXT_GP_HPP_
