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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pdext/errors.hpp"
#include "pdext/gp.hpp"

using namespace pdext;
using doctest::Approx;

TEST_CASE("covariance kernels") {
  CHECK(CovKernel::bm()(0.3, 0.7) == Approx(0.3));
  CHECK(CovKernel::bridge()(0.3, 0.7) == Approx(0.09));
  CHECK(CovKernel::bridge().mean(0.4) == Approx(0.4));
  CHECK(CovKernel::bm().mean(0.4) == 0.0);
  CHECK(CovKernel::ou(2.0)(0.0, 1.0) == Approx(0.5 * std::exp(-1.0)));
  CHECK(CovKernel::fbm(0.5)(0.2, 0.9) == Approx(0.2));
  CHECK(CovKernel::fbm(0.75)(1.0, 1.0) == Approx(1.0));
  CHECK(CovKernel::from_pd(PdFunction::catalog(CatalogId::F3))(0.1, 0.6) == Approx(std::exp(-0.5)));
  CHECK(CovKernel::from_string("ou:2")(0.0, 1.0) == Approx(0.5 * std::exp(-1.0)));
  CHECK(CovKernel::from_string(CovKernel::bridge().name()).id() == CovKernel::Id::bridge);
  CHECK_THROWS_AS(CovKernel::from_string("fbm"), ArgumentError);
  CHECK_THROWS_AS(CovKernel::from_string("levy"), ArgumentError);
  CHECK_THROWS_AS(CovKernel::ou(0.0), ParameterError);
  CHECK(CovKernel::bm().as_kernel()(0.2, 0.5).real() == Approx(0.2));
}

TEST_CASE("covariance matrices validate their times") {
  const Eigen::MatrixXd c = cov_matrix(CovKernel::bm(), {0.1, 0.2, 0.5});
  CHECK(c(2, 1) == Approx(0.2));
  CHECK(c(1, 2) == c(2, 1));
  CHECK_THROWS_AS(cov_matrix(CovKernel::bm(), {0.2, 0.2}), ArgumentError);
  CHECK_THROWS_AS(cov_matrix(CovKernel::bm(), {-0.1, 0.2}), DomainError);
  CHECK_THROWS_AS(cov_matrix(CovKernel::bridge(), {0.5, 1.5}), DomainError);
}

TEST_CASE("jittered Cholesky") {
  const Eigen::MatrixXd c = cov_matrix(CovKernel::bm(), {0.1, 0.4, 0.9});
  const Eigen::MatrixXd l = jittered_cholesky(c);
  CHECK((l * l.transpose() - c).cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(4, 4);
  const Eigen::MatrixXd lo = jittered_cholesky(ones);
  CHECK((lo * lo.transpose() - ones).cwiseAbs().maxCoeff() < 1e-6);
  CHECK_THROWS_AS(jittered_cholesky(-Eigen::MatrixXd::Identity(3, 3)), NumericError);
}

TEST_CASE("sampling is reproducible and matches the covariance") {
  const std::vector<double> ts = {0.25, 0.5, 0.75, 1.0};
  const PathEnsemble a = sample_paths(CovKernel::bm(), ts, 4000, 7);
  const PathEnsemble b = sample_paths(CovKernel::bm(), ts, 4000, 7);
  const PathEnsemble c = sample_paths(CovKernel::bm(), ts, 4000, 8);
  CHECK(a.paths == b.paths);
  CHECK(a.paths != c.paths);
  CHECK(a.paths.rows() == 4000);
  CHECK(a.paths.cols() == 4);
  // The first rows do not depend on how many paths follow.
  const PathEnsemble head = sample_paths(CovKernel::bm(), ts, 10, 7);
  CHECK(head.paths == a.paths.topRows(10));
  const CovarianceReport r = compare_covariance(empirical_covariance(a), cov_matrix(CovKernel::bm(), ts), 4000);
  CHECK(r.tolerance == Approx(5.0 / std::sqrt(4000.0)));
  CHECK(r.pass);
}

TEST_CASE("bridge paths are pinned") {
  const std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
  const PathEnsemble e = sample_paths(CovKernel::bridge(), ts, 200, 3);
  CHECK(e.paths.col(0).cwiseAbs().maxCoeff() < 1e-4);
  CHECK((e.paths.col(4).array() - 1.0).abs().maxCoeff() < 1e-4);
  CHECK(e.mean[2] == Approx(0.5));
}

TEST_CASE("Ornstein-Uhlenbeck correlation at unit lag") {
  const int m = 20000;
  const PathEnsemble e = sample_paths(CovKernel::ou(1.0), {1.0, 2.0}, m, 5);
  const Eigen::MatrixXd c = empirical_covariance(e);
  CHECK(c(0, 1) / std::sqrt(c(0, 0) * c(1, 1)) == Approx(std::exp(-0.5)).epsilon(0.05));
}

TEST_CASE("Ornstein-Uhlenbeck paths from Brownian motion") {
  const std::vector<double> xs = {0.0, 0.25, 0.5, 1.0};
  const int m = 20000;
  const PathEnsemble bm = sample_paths(CovKernel::bm(), ou_bm_times(xs), m, 21);
  const PathEnsemble x = ou_from_bm(bm, xs);
  const CovarianceReport r = compare_covariance(
      empirical_covariance(x), cov_matrix(CovKernel::from_pd(PdFunction::catalog(CatalogId::F3)), xs), m);
  CHECK(r.pass);

  const PathEnsemble bm1 = sample_paths(CovKernel::bm(), ou_bm_times(xs, 1.0), m, 22);
  const CovarianceReport r1 = compare_covariance(empirical_covariance(ou_from_bm(bm1, xs, 1.0)),
                                                 cov_matrix(CovKernel::ou(1.0), xs), m);
  CHECK(r1.pass);
  CHECK_THROWS_AS(ou_from_bm(bm, xs, 1.0), ArgumentError);
}

TEST_CASE("Ito isometry") {
  std::vector<double> ts;
  for (int i = 0; i <= 64; ++i) ts.push_back(i / 64.0);
  const PathEnsemble bm = sample_paths(CovKernel::bm(), ts, 10000, 11);
  const ItoReport zero = ito_isometry_check(std::vector<double>(ts.size(), 0.0), bm);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);
  const ItoReport one = ito_isometry_check(std::vector<double>(ts.size(), 1.0), bm);
  CHECK(one.rhs == Approx(1.0));
  CHECK(std::abs(one.z_score) < 3.0);
  const ItoReport lin = ito_isometry_check(ts, bm);
  // Right-endpoint Riemann sum of t^2.
  CHECK(lin.rhs == Approx(65.0 * 129.0 / (6.0 * 64.0 * 64.0)));
  CHECK(std::abs(lin.z_score) < 3.0);
  CHECK_THROWS_AS(ito_isometry_check({1.0}, bm), ArgumentError);

  int beyond = 0;
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    const PathEnsemble e = sample_paths(CovKernel::bm(), ts, 10000, seed);
    if (std::abs(ito_isometry_check(ts, e).z_score) >= 4.0) ++beyond;
  }
  CHECK(beyond == 0);
}

TEST_CASE("covariance matrices of every kernel are positive semidefinite") {
  const std::vector<CovKernel> kernels = {
      CovKernel::bm(), CovKernel::bridge(), CovKernel::ou(1.5), CovKernel::fbm(0.3),
      CovKernel::fbm(0.8), CovKernel::from_pd(PdFunction::catalog(CatalogId::F3)),
      CovKernel::from_pd(PdFunction::catalog(CatalogId::F5))};
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int seed = 0; seed < 100; ++seed) {
    std::vector<double> ts(12);
    for (double& t : ts) t = u(gen);
    std::sort(ts.begin(), ts.end());
    for (const CovKernel& k : kernels) {
      const Eigen::MatrixXd c = cov_matrix(k, ts);
      const double floor = -1e-12 * std::max(1.0, c.trace());
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues().minCoeff() >= floor);
    }
  }
}

TEST_CASE("empirical covariance of every kernel") {
  std::vector<double> ts;
  for (int i = 1; i <= 20; ++i) ts.push_back(i / 20.0);
  const int m = 10000;
  for (const CovKernel& k : {CovKernel::bm(), CovKernel::bridge(), CovKernel::ou(1.0), CovKernel::fbm(0.7),
                             CovKernel::from_pd(PdFunction::catalog(CatalogId::F2))}) {
    const PathEnsemble e = sample_paths(k, ts, m, 9);
    CHECK_MESSAGE(compare_covariance(empirical_covariance(e), cov_matrix(k, ts), m).pass, k.name());
  }
}

TEST_CASE("random power series") {
  const PowerSeriesReport r = random_power_series_charfn(0.5, 20000, {0.0, 0.5, 1.0, 2.0, 4.0});
  CHECK(r.terms == 40);
  // prod_{k >= 1} cos(l / 2^k) = sin(l) / l.
  for (std::size_t i = 1; i < r.lambdas.size(); ++i) {
    const double l = r.lambdas[i];
    CHECK(r.model[i] == Approx(std::sin(l) / l).epsilon(1e-10));
  }
  CHECK(r.model[0] == 1.0);
  CHECK(r.sup_error < 5.0 / std::sqrt(20000.0));
  CHECK_THROWS_AS(random_power_series_charfn(1.0, 10, {0.0}), ParameterError);

  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(-10.0 + 0.5 * i);
  const PowerSeriesReport third = random_power_series_charfn(1.0 / 3.0, 100000, grid);
  CHECK(third.sup_error < 0.02);
  CHECK(std::abs(third.empirical[20] - 1.0) < 1e-15);
}
