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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "pdext/errors.hpp"
#include "pdext/rkhs.hpp"

using namespace pdext;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson rule for int_lo^hi f, n even.
template <class Fn>
auto simpson(Fn f, double lo, double hi, int n = 4000) {
  const double h = (hi - lo) / n;
  auto acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return acc * (h / 3.0);
}

double bump(double x, double c, double r, int k) {
  const double t = (x - c) / r;
  return std::abs(t) < 1.0 ? std::pow(1.0 - t * t, k) : 0.0;
}

}  // namespace

TEST_CASE("test function transforms") {
  const TestFunction phi = TestFunction::poly_bump(0.3, 0.2, 4);
  for (double l : {0.0, 1e-3, 0.5, 3.0, 40.0}) {
    const complex want = simpson(
        [&](double x) { return bump(x, 0.3, 0.2, 4) * std::polar(1.0, -l * x); }, 0.1, 0.5);
    CHECK(std::abs(phi.transform(l) - want) < 1e-10);
  }
  CHECK(phi.inside(Interval(0.0, 1.0)));
  CHECK_FALSE(phi.inside(Interval(0.2, 1.0)));
  CHECK_FALSE(TestFunction::poly_bump(0.4, 0.1, 2).inside(Interval(0.0, 0.5)));

  const TestFunction g = TestFunction::gaussian_bump(0.0, 0.1);
  CHECK(g.transform(0.0).real() == Approx(0.1 * std::sqrt(2.0 * kPi)).epsilon(1e-10));
  CHECK(g.transform(5.0).real() == Approx(0.1 * std::sqrt(2.0 * kPi) * std::exp(-0.125)).epsilon(1e-10));

  const TestFunction s = TestFunction::sampled({0.0, 0.5, 1.0}, {0.0, 1.0, 0.0});
  CHECK(s(0.25).real() == Approx(0.5));
  CHECK(s.transform(0.0).real() == Approx(0.5).epsilon(1e-10));
  CHECK_THROWS_AS(TestFunction::poly_bump(0.0, 1.0, 1), ArgumentError);
}

TEST_CASE("H_F norms of finite-rank kernels") {
  const TestFunction phi = TestFunction::poly_bump(0.2, 0.15, 3);
  const auto moment = [&](auto kernel) {
    return simpson([&](double x) { return bump(x, 0.2, 0.15, 3) * kernel(x); }, 0.05, 0.35);
  };
  // cos(x - y) = cos x cos y + sin x sin y.
  const double c = moment([](double x) { return std::cos(x); });
  const double s = moment([](double x) { return std::sin(x); });
  CHECK(hf_norm2(PdFunction::catalog(CatalogId::F6), phi) == Approx(c * c + s * s).epsilon(1e-10));

  const PdFunction wave = PdFunction::from_callable(
      Interval::symmetric(1.0), [](double x) { return std::polar(1.0, 2.0 * kPi * x); }, "wave");
  const complex w = moment([](double x) { return std::polar(1.0, -2.0 * kPi * x); });
  CHECK(hf_norm2(wave, phi) == Approx(std::norm(w)).epsilon(1e-10));

  const double m0 = moment([](double) { return 1.0; });
  CHECK(hf_norm2(PdFunction::constant(Interval::symmetric(1.0)), phi) == Approx(m0 * m0).epsilon(1e-10));
}

TEST_CASE("inner product is hermitian") {
  const PdFunction f = PdFunction::catalog(CatalogId::F7, std::nullopt, 1.5);
  const TestFunction phi = TestFunction::poly_bump(0.2, 0.15, 3);
  const TestFunction psi = TestFunction::gaussian_bump(0.5, 0.05);
  CHECK(std::abs(hf_inner(f, phi, psi) - std::conj(hf_inner(f, psi, phi))) < 1e-12);
  CHECK(hf_inner(f, phi, phi).imag() == Approx(0.0).epsilon(1e-12));
  CHECK(hf_norm2(f, phi) > 0.0);
}

TEST_CASE("isometry onto L2(mu)") {
  const IsometryReport r = isometry_check(PdFunction::catalog(CatalogId::F3),
                                          SpectralMeasure::catalog(CatalogId::F3),
                                          TestFunction::poly_bump(0.5, 0.3, 4));
  CHECK(r.abs_error < 1e-6);
  CHECK(r.hf_norm2 == Approx(r.l2_norm2).epsilon(1e-5));
  const IsometryReport g = isometry_check(PdFunction::catalog(CatalogId::F5),
                                          SpectralMeasure::catalog(CatalogId::F5),
                                          TestFunction::gaussian_bump(0.1, 0.1));
  CHECK(g.abs_error < 1e-8);
}

TEST_CASE("F_phi is the convolution of phi with F") {
  const PdFunction f = PdFunction::catalog(CatalogId::F3);
  const TestFunction phi = TestFunction::poly_bump(0.5, 0.3, 4);
  const HFVector v = HFVector::convolved(f, phi);
  for (double x : {0.0, 0.4, 0.9}) {
    const double want = simpson([&](double y) { return bump(y, 0.5, 0.3, 4) * std::exp(-std::abs(x - y)); },
                                0.2, 0.8, 8000);
    CHECK(v(x).real() == Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("adjoint of the isometry") {
  const SpectralMeasure mu3 = SpectralMeasure::catalog(CatalogId::F3);
  const std::vector<double> xs = {0.0, 0.25, 0.5, 0.75};
  const HFVector one = adjoint_apply(mu3, [](double) { return complex(1.0, 0.0); }, xs);
  const HFVector shift = adjoint_apply(mu3, [](double l) { return std::polar(1.0, 0.3 * l); }, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(one.values()[i] - std::exp(-xs[i])) < 1e-3);
    CHECK(std::abs(shift.values()[i] - std::exp(-(xs[i] + 0.3))) < 1e-3);
  }
  CHECK_THROWS_AS(adjoint_apply(mu3, [](double l) { return complex(l, 0.0); }, xs), DomainError);

  const HFVector gauss = adjoint_apply(SpectralMeasure::catalog(CatalogId::F5),
                                       [](double) { return complex(1.0, 0.0); }, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(gauss.values()[i] - std::exp(-0.5 * xs[i] * xs[i])) < 1e-10);
  }
}

TEST_CASE("membership of kernel sections and of the indicator") {
  const MembershipReport plus = membership_test(PdFunction::catalog(CatalogId::F3), 1.0,
                                                [](double x) { return complex(std::exp(-x), 0.0); });
  CHECK(plus.verdict == MembershipVerdict::member_evidence);
  CHECK(plus.norm2 == Approx(1.0).epsilon(5e-2));
  CHECK(plus.sizes.size() == 5);

  const MembershipReport one = membership_test(PdFunction::catalog(CatalogId::F1), 1.0,
                                               [](double) { return complex(1.0, 0.0); });
  CHECK(one.verdict == MembershipVerdict::diverging);
  CHECK(to_string(one.verdict) == "diverging");
}

TEST_CASE("deficiency integral") {
  for (double a : {0.5, 1.0}) {
    // int dl / (pi (1 + l^2)^2) = 1/2 and int cos(a l) dl / (pi (1 + l^2)^2) = (1 + a) e^{-a} / 2.
    const DeficiencyIntegral c = deficiency_integral(a, SpectralMeasure::catalog(CatalogId::F3));
    REQUIRE(c.value.has_value());
    CHECK(*c.value == Approx(0.5 * (std::exp(2.0 * a) + 1.0) - (1.0 + a)).epsilon(1e-5));
    CHECK_FALSE(c.divergent);

    const DeficiencyIntegral d = deficiency_integral(a, SpectralMeasure::catalog(CatalogId::F6));
    REQUIRE(d.value.has_value());
    CHECK(*d.value == Approx(0.5 * (std::exp(2.0 * a) + 1.0 - 2.0 * std::exp(a) * std::cos(a))).epsilon(1e-12));
  }
  const DeficiencyComparison cauchy = compare_deficiency(1.0, SpectralMeasure::catalog(CatalogId::F3));
  CHECK(cauchy.second_moment.indices == DeficiencyIndices::one_one);
  CHECK(cauchy.agree);
  const DeficiencyComparison gauss = compare_deficiency(1.0, SpectralMeasure::catalog(CatalogId::F5));
  CHECK(gauss.second_moment.indices == DeficiencyIndices::zero_zero);
  CHECK_FALSE(gauss.agree);
}

TEST_CASE("Green's function residuals") {
  CHECK(greens_residual(GreensCase::f2, TestFunction::poly_bump(0.25, 0.15, 6)) < 1e-4);
  CHECK(greens_residual(GreensCase::f3, TestFunction::poly_bump(0.5, 0.3, 6)) < 1e-4);
  CHECK_THROWS_AS(greens_residual(GreensCase::f2, TestFunction::poly_bump(0.5, 0.3, 6)), ArgumentError);
  CHECK(greens_case_from_string(to_string(GreensCase::f3)) == GreensCase::f3);
  CHECK_THROWS_AS(greens_case_from_string("f9"), ArgumentError);
}

TEST_CASE("kernel sections reproduce boundary data") {
  const auto g = [](double y) { return std::cos(3.0 * y) + y; };
  const auto dg = [](double y) { return -3.0 * std::sin(3.0 * y) + 1.0; };
  // The energy form of F_x against g is g(x) minus the boundary values
  // weighted by F_x at the end points, halved.
  for (double x : {0.1, 0.3}) {
    const BoundaryReport b2 = boundary_reproducing(GreensCase::f2, x, g, dg);
    CHECK(b2.rhs == Approx(g(x) - 0.5 * (g(0.0) + g(0.5))).epsilon(1e-12));
    CHECK(b2.error < 1e-8);
  }
  for (double x : {0.05, 0.3, 0.8}) {
    const BoundaryReport b3 = boundary_reproducing(GreensCase::f3, x, g, dg);
    CHECK(b3.lhs == Approx(g(x) - 0.5 * (std::exp(-x) * g(0.0) + std::exp(x - 1.0) * g(1.0))).epsilon(1e-8));
    CHECK(b3.error < 1e-8);
  }
  CHECK_THROWS_AS(boundary_reproducing(GreensCase::f2, 0.7, g, dg), ArgumentError);
}
