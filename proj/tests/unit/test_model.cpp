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
#include "pdext/bochner.hpp"
#include "pdext/errors.hpp"
#include "pdext/interval.hpp"
#include "pdext/kernel.hpp"
#include "pdext/pd_function.hpp"
#include "pdext/pdcheck.hpp"
#include "pdext/serialize.hpp"
#include "pdext/spectral_measure.hpp"

using namespace pdext;
using doctest::Approx;

namespace {

std::vector<double> symmetric_grid(double a, int n) {
  std::vector<double> xs;
  for (int i = 0; i <= n; ++i) xs.push_back(-a + 2.0 * a * i / n);
  return xs;
}

}  // namespace

TEST_CASE("interval rejects empty ranges and tests closure") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), ArgumentError);
  const Interval i(0.0, 0.5);
  CHECK(i.contains(0.25));
  CHECK_FALSE(i.contains(0.5));
  CHECK(i.contains_closed(0.5));
  CHECK(Interval::symmetric(2.0).contains(Interval::symmetric(1.0)));
  CHECK_FALSE(Interval(0.0, 0.5).intersect(Interval(1.0, 2.0)).has_value());
}

TEST_CASE("grid weights sum to the interval length") {
  for (const GridSpec& g : {GridSpec::midpoint(Interval(0.0, 0.5), 100),
                            GridSpec::gauss_legendre(Interval(0.0, 0.5), 64),
                            GridSpec::trapezoid(Interval(0.0, 0.5), 33)}) {
    double s = 0.0;
    for (double w : g.weights()) {
      CHECK(w > 0.0);
      s += w;
    }
    CHECK(s == Approx(0.5).epsilon(1e-13));
    for (std::size_t i = 1; i < g.nodes().size(); ++i) CHECK(g.nodes()[i] > g.nodes()[i - 1]);
  }
}

TEST_CASE("catalog values") {
  CHECK(PdFunction::catalog(CatalogId::F3)(0.5).real() == Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(PdFunction::catalog(CatalogId::F2)(-0.25).real() == Approx(0.75));
  for (CatalogId id : all_catalog_ids()) {
    const PdFunction f = PdFunction::catalog(id);
    CHECK(std::abs(f(0.0) - complex(1.0, 0.0)) < 1e-15);
    CHECK(f.half_width() == Approx(default_half_width(id)));
  }
  const PdFunction f7 = PdFunction::catalog(CatalogId::F7, std::nullopt, 2.0);
  const complex want = 1.0 / ((complex(1.0, -0.3)) * complex(1.0, -0.3));
  CHECK(std::abs(f7(0.3) - want) < 1e-15);
  CHECK_THROWS_AS(PdFunction::catalog(CatalogId::F7, std::nullopt, 0.0), ParameterError);
}

TEST_CASE("hermitian symmetry and the bound |F| <= F(0) hold on grids") {
  for (CatalogId id : all_catalog_ids()) {
    const PdFunction f = PdFunction::catalog(id);
    for (double x : symmetric_grid(f.half_width(), 64)) {
      CHECK(std::abs(f(-x) - std::conj(f(x))) < 1e-12);
      CHECK(std::abs(f(x)) <= f(0.0).real() + 1e-12);
    }
  }
}

TEST_CASE("sampled tables interpolate linearly and reject outside points") {
  std::vector<double> nodes = symmetric_grid(2.0, 400);
  std::vector<double> vals;
  for (double x : nodes) vals.push_back(std::exp(-std::abs(x)));
  const PdFunction t = PdFunction::sampled(nodes, vals);
  CHECK(t(0.3).real() == Approx(std::exp(-0.3)).epsilon(1e-4));
  CHECK_THROWS_AS(t(2.5), DomainError);
  const PdFunction r = restrict(t, Interval::symmetric(1.0));
  CHECK(r.half_width() == Approx(1.0));
  CHECK(r(0.3).real() == Approx(std::exp(-0.3)).epsilon(1e-4));
  CHECK_THROWS_AS(r(1.5), DomainError);
  CHECK_THROWS_AS(restrict(t, Interval(-1.0, 0.5)), ArgumentError);
  CHECK_THROWS_AS(restrict(t, Interval::symmetric(3.0)), ArgumentError);
}

TEST_CASE("real and imaginary split") {
  const RealImagSplit s = split_real_imag(PdFunction::catalog(CatalogId::F7));
  for (double x : symmetric_grid(1.0, 20)) {
    CHECK(s.even(x).real() == Approx(1.0 / (1.0 + x * x)));
    CHECK(s.odd(x) == Approx(x / (1.0 + x * x)));
  }
  const PdFunction mix = PdFunction::from_callable(
      Interval::symmetric(1.0),
      [](double x) { return 0.5 * (std::polar(1.0, -x) + std::polar(1.0, 2.0 * x)); }, "mix");
  const RealImagSplit m = split_real_imag(mix);
  for (double x : symmetric_grid(1.0, 20)) {
    CHECK(m.even(x).real() == Approx(0.5 * (std::cos(x) + std::cos(2.0 * x))));
    CHECK(m.odd(x) == Approx(0.5 * (std::sin(2.0 * x) - std::sin(x))));
    CHECK(std::abs(m.even(x) + complex(0.0, m.odd(x)) - mix(x)) < 1e-12);
  }
  const RealImagSplit r = split_real_imag(PdFunction::catalog(CatalogId::F3));
  CHECK(r.odd(0.4) == 0.0);
}

TEST_CASE("products stay positive definite and reflection conjugates") {
  const PdFunction c2 = product(PdFunction::catalog(CatalogId::F6), PdFunction::catalog(CatalogId::F6));
  CHECK(c2(0.3).real() == Approx(std::cos(0.3) * std::cos(0.3)));
  std::vector<double> pts;
  for (int i = 0; i < 32; ++i) pts.push_back(i * (std::numbers::pi / 4.0) / 31.0);
  CHECK(is_pd_grid(c2, pts).verdict == GramVerdict::psd);
  const PdFunction f3 = PdFunction::catalog(CatalogId::F3);
  const PdFunction one = PdFunction::constant(Interval::symmetric(1.0));
  CHECK(product(f3, one)(0.7).real() == Approx(f3(0.7).real()));
  const PdFunction narrow = product(f3, PdFunction::catalog(CatalogId::F2));
  CHECK(narrow.half_width() == Approx(0.5));

  const PdFunction f7 = PdFunction::catalog(CatalogId::F7);
  const PdFunction r7 = conjugate_reflect(f7);
  CHECK(std::abs(r7(0.4) - 1.0 / complex(1.0, 0.4)) < 1e-15);
  CHECK(std::abs(conjugate_reflect(f3)(0.4) - f3(0.4)) < 1e-15);
}

TEST_CASE("product transform matches the convolution of the measures") {
  const PdFunction f = product(PdFunction::catalog(CatalogId::F3), PdFunction::catalog(CatalogId::F5));
  const SpectralMeasure mu = convolve(SpectralMeasure::catalog(CatalogId::F3),
                                      SpectralMeasure::catalog(CatalogId::F5));
  for (double x : {0.0, 0.3, -0.6, 0.9}) {
    const double want = std::exp(-std::abs(x) - 0.5 * x * x);
    CHECK(f(x).real() == Approx(want).epsilon(1e-14));
    CHECK(bochner_transform(mu, x).value.real() == Approx(want).epsilon(1e-4));
  }
}

TEST_CASE("kernels are hermitian") {
  const Kernel fb = Kernel::fbm(0.5);
  CHECK(fb(0.3, 0.7).real() == Approx(0.3));
  CHECK_THROWS_AS(Kernel::fbm(1.0), ParameterError);
  const Kernel c = Kernel::cauchy();
  CHECK(std::abs(c(0.2, -0.5) - std::conj(c(-0.5, 0.2))) < 1e-15);
  const Kernel k = Kernel::from_pd(PdFunction::catalog(CatalogId::F2));
  CHECK(k(0.1, 0.3).real() == Approx(0.8));
}

TEST_CASE("spectral measures report their mass and reject bad atoms") {
  for (CatalogId id : all_catalog_ids()) {
    CHECK(SpectralMeasure::catalog(id).total_mass() == Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(SpectralMeasure({Atom{0.0, -1.0}}, {}), ArgumentError);
  const SpectralMeasure m = SpectralMeasure::dirac(2.0, 0.5) + SpectralMeasure::dirac(-1.0, 0.25);
  CHECK(m.total_mass() == Approx(0.75));
  const SpectralMeasure s = SpectralMeasure::catalog(CatalogId::F3).pushforward_scaled(2.0);
  // Density of the image: rho(l / 2) / 2.
  CHECK(s.density_at(1.0) == Approx(0.5 / (std::numbers::pi * 1.25)));
}

TEST_CASE("json round trip") {
  const PdFunction f = PdFunction::catalog(CatalogId::F7, 0.8, 2.5);
  const PdFunction g = pd_function_from_json(to_json(f));
  CHECK(std::abs(g(0.3) - f(0.3)) < 1e-15);
  CHECK(g.half_width() == Approx(0.8));

  std::vector<double> nodes = symmetric_grid(1.0, 20);
  std::vector<complex> vals;
  for (double x : nodes) vals.push_back(std::polar(std::exp(-x * x), 0.2 * x));
  const PdFunction t = PdFunction::sampled(nodes, vals);
  const PdFunction u = pd_function_from_json(to_json(t));
  CHECK(std::abs(u(0.33) - t(0.33)) < 1e-15);

  const SpectralMeasure mu = SpectralMeasure::catalog(CatalogId::F3) + SpectralMeasure::dirac(1.0, 0.5);
  const SpectralMeasure back = measure_from_json(to_json(mu));
  CHECK(back.total_mass() == Approx(mu.total_mass()));
  CHECK(back.density_at(0.7) == Approx(mu.density_at(0.7)));

  CHECK_THROWS_AS(pd_function_from_json(nlohmann::json{{"kind", "nope"}}), ArgumentError);
  CHECK_THROWS_AS(measure_from_json(nlohmann::json{{"densities", {{{"id", "weird"}}}}}), ArgumentError);
}
