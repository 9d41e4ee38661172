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
#include <numbers>
#include <random>

#include "doctest.h"
#include "pdext/errors.hpp"
#include "pdext/pdcheck.hpp"

using namespace pdext;
using doctest::Approx;

namespace {

PdFunction inverse_quadratic() {
  return PdFunction::from_callable(
      Interval(-1.0, 1.0), [](double x) { return complex(1.0 / (1.0 - x * x), 0.0); },
      "1/(1-x^2)", false, true);
}

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> p;
  for (int i = 0; i < n; ++i) p.push_back(lo + (hi - lo) * (i + 0.5) / n);
  return p;
}

}  // namespace

TEST_CASE("gram matrices by direct arithmetic") {
  const double c = std::cos(std::numbers::pi / 8.0);
  const Eigen::MatrixXcd g = gram_matrix(PdFunction::catalog(CatalogId::F6), {0.0, std::numbers::pi / 8.0});
  CHECK(g(0, 0).real() == Approx(1.0));
  CHECK(g(0, 1).real() == Approx(c));
  CHECK(g(1, 0).real() == Approx(c));

  const Eigen::MatrixXcd h = gram_matrix(inverse_quadratic(), {0.0, 0.3});
  CHECK(h(0, 1).real() == Approx(1.0 / (1.0 - 0.09)));

  const Eigen::MatrixXcd f2 = gram_matrix(PdFunction::catalog(CatalogId::F2), {0.0, 0.25, 0.4});
  CHECK(f2(0, 1).real() == Approx(0.75));
  CHECK(f2(0, 2).real() == Approx(0.6));
  CHECK(f2(1, 2).real() == Approx(0.85));
  CHECK(f2(2, 2).real() == Approx(1.0));

  CHECK_THROWS_AS(gram_matrix(PdFunction::catalog(CatalogId::F2), {0.0, 0.8}), DomainError);
}

TEST_CASE("grid verdicts") {
  for (double x : {0.2, 0.5, 0.7}) {
    const GramReport r = is_pd_grid(inverse_quadratic(), {0.0, x});
    CHECK(r.verdict == GramVerdict::indefinite);
    CHECK(r.min_eigenvalue == Approx(-x * x / (1.0 - x * x)).epsilon(1e-12));
  }
  CHECK(is_pd_grid(PdFunction::catalog(CatalogId::F6), uniform(0.0, std::numbers::pi / 4.0, 24)).verdict ==
        GramVerdict::psd);
  CHECK(is_pd_grid(PdFunction::catalog(CatalogId::F5), uniform(0.0, 1.0, 32)).verdict == GramVerdict::psd);
}

TEST_CASE("indefiniteness survives adding points") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p = {0.0, 0.5};
    for (int k = 0; k < 6; ++k) p.push_back(u(gen));
    CHECK(is_pd_grid(inverse_quadratic(), p).verdict == GramVerdict::indefinite);
  }
}

TEST_CASE("kernel checks") {
  const GramReport e = kernel_pd(Kernel::exp_sum(), uniform(0.0, 3.0, 12));
  CHECK(e.verdict == GramVerdict::psd);
  int rank = 0;
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) rank += e.eigenvalues(i) > 1e-10 * e.max_eigenvalue;
  CHECK(rank == 1);
  CHECK(kernel_pd(Kernel::cauchy(), uniform(-0.95, 0.95, 20)).verdict == GramVerdict::psd);
  CHECK(kernel_pd(Kernel::min_kernel(), uniform(0.0, 1.0, 20)).verdict == GramVerdict::psd);

  const std::vector<double> p = uniform(0.0, 0.5, 16);
  const PdFunction f = PdFunction::catalog(CatalogId::F2);
  const GramReport a = is_pd_grid(f, p);
  const GramReport b = kernel_pd(Kernel::from_pd(f), p);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("domination") {
  const std::vector<double> p = uniform(0.0, 0.5, 12);
  const DominationResult r =
      domination(PdFunction::catalog(CatalogId::F2), PdFunction::catalog(CatalogId::F3), p);
  CHECK(r.holds);
  CHECK(std::isfinite(r.minimal_a));
  CHECK(domination(PdFunction::catalog(CatalogId::F2), PdFunction::catalog(CatalogId::F3), p,
                   r.minimal_a * 1.001)
            .holds);

  const PdFunction f3 = PdFunction::catalog(CatalogId::F3);
  CHECK(domination(f3, f3, p, 1.0).holds);

  const std::vector<double> q = uniform(0.0, 0.25, 10);
  const DominationResult c =
      domination(PdFunction::catalog(CatalogId::F4), PdFunction::catalog(CatalogId::F1), q);
  CHECK(c.holds);

  // Reordering points permutes both Gram matrices the same way.
  std::vector<double> rev(p.rbegin(), p.rend());
  CHECK(domination(PdFunction::catalog(CatalogId::F2), f3, rev).minimal_a ==
        Approx(r.minimal_a).epsilon(1e-8));

  const PdFunction zero = PdFunction::from_callable(
      Interval::symmetric(1.0), [](double) { return complex(0.0, 0.0); }, "zero", false, true);
  CHECK_THROWS_AS(domination(f3, zero, p), DegenerateError);
}

TEST_CASE("Polya criterion") {
  std::vector<double> tent;
  for (int i = 0; i <= 100; ++i) tent.push_back(1.0 - i / 100.0);
  CHECK(polya_criterion(tent, 0.01).pass);

  std::vector<double> concave;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 50.0;
    concave.push_back(x < 1.0 ? std::exp(-0.5 * x * x) : std::max(0.0, std::exp(-0.5) * (2.0 - x)));
  }
  const PolyaReport bad = polya_criterion(concave, 0.02);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.failures.empty());
  CHECK_THROWS_AS(polya_criterion({1.0, 0.5, 0.0}, 0.5), DataError);
}

TEST_CASE("complete monotonicity") {
  std::vector<double> e;
  std::vector<double> r;
  std::vector<double> h;
  for (int i = 0; i <= 200; ++i) {
    const double x = i * 0.05;
    e.push_back(std::exp(-x));
    r.push_back(x);
    h.push_back(1.0 / (x + 1.0));
  }
  CHECK(completely_monotone(e, 6).pass);
  CHECK(completely_monotone(h, 6).pass);
  const MonotoneReport f = completely_monotone(r, 3);
  CHECK_FALSE(f.pass);
  CHECK(f.failed_order == 1);
  CHECK_THROWS_AS(completely_monotone({1.0, 0.5, 0.25}, 4), DataError);
}
