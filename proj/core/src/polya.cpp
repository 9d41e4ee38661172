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

#include "pdext/polya.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pdext/errors.hpp"
#include "pdext/parallel.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPolyaSamples = 4096;
constexpr double kMaxSupportFactor = 64.0;

double base_value(const PdFunction& f, double x) { return f(x).real(); }

// F'(0+) of the base.
double origin_slope(const PdFunction& f) {
  if (auto d = f.derivative(std::numeric_limits<double>::min())) return d->real();
  const double h = f.half_width() / 256.0;
  return (-3.0 * base_value(f, 0.0) + 4.0 * base_value(f, h) - base_value(f, 2.0 * h)) /
         (2.0 * h);
}

}  // namespace

std::string to_string(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::polya_pd:
      return "polya_pd";
    case ExtensionClass::refuted:
      return "refuted";
    case ExtensionClass::undecided:
      return "undecided";
  }
  return "undecided";
}

double endpoint_slope(const PdFunction& f) {
  const double a = f.half_width();
  if (auto d = f.derivative(a)) return d->real();
  const double h = a / 256.0;
  return (3.0 * base_value(f, a) - 4.0 * base_value(f, a - h) + base_value(f, a - 2.0 * h)) /
         (2.0 * h);
}

SplineExtension::SplineExtension(PdFunction base, std::vector<Knot> knots)
    : base_(std::move(base)), knots_(std::move(knots)) {
  if (!base_.real_valued()) throw ConstructionError("spline extension needs a real base");
  if (!base_.domain().bounded()) throw ConstructionError("spline extension needs a bounded base");
  const double a = base_.half_width();
  if (knots_.size() < 2) throw ConstructionError("spline extension needs at least two knots");
  if (std::abs(knots_.front().x - a) > 1e-12 * std::max(1.0, a)) {
    throw ConstructionError("first knot must sit at the endpoint a");
  }
  const double fa = base_value(base_, a);
  if (std::abs(knots_.front().value - fa) > 1e-9 * std::max(1.0, std::abs(fa))) {
    throw ConstructionError("first knot value does not match F(a-)");
  }
  knots_.front() = {a, fa};
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i].x > knots_[i - 1].x)) throw ConstructionError("knot positions must increase");
    if (knots_[i].value > knots_[i - 1].value) {
      throw ConstructionError("knot values must not increase");
    }
  }
  if (std::abs(knots_.back().value) > 1e-12) throw ConstructionError("last knot must reach zero");
  knots_.back().value = 0.0;
}

double SplineExtension::operator()(double x) const {
  const double t = std::abs(x);
  const double a = base_.half_width();
  if (t < a) return base_value(base_, t);
  if (t >= knots_.back().x) return 0.0;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                             [](double v, const Knot& k) { return v < k.x; });
  const Knot& r = *it;
  const Knot& l = *(it - 1);
  const double s = (t - l.x) / (r.x - l.x);
  return (1.0 - s) * l.value + s * r.value;
}

PdFunction SplineExtension::as_function() const {
  SplineExtension self = *this;
  return PdFunction::from_callable(
      Interval::real_line(), [self](double x) { return complex(self(x), 0.0); },
      "polya(" + base_.description() + ")", false, true, true);
}

SplineExtension build_spline_extension(const PdFunction& f, AutoTangent) {
  if (!f.real_valued()) throw ConstructionError("auto tangent needs a real base");
  const double a = f.half_width();
  const double fa = base_value(f, a);
  const double slope = endpoint_slope(f);
  if (!(slope < 0.0)) throw ConstructionError("auto tangent needs a negative slope at a-");
  if (!(fa > 0.0)) throw ConstructionError("auto tangent needs F(a-) > 0");
  const double c = a - fa / slope;
  return SplineExtension(f, {{a, fa}, {c, 0.0}});
}

SplineExtension build_spline_extension(const PdFunction& f, const std::vector<Knot>& knots) {
  if (knots.empty()) throw ConstructionError("knot list is empty");
  const double a = f.half_width();
  std::vector<Knot> all;
  if (std::abs(knots.front().x - a) > 1e-12 * std::max(1.0, a)) {
    if (knots.front().x < a) throw ConstructionError("knots must satisfy x >= a");
    all.push_back({a, base_value(f, a)});
  }
  all.insert(all.end(), knots.begin(), knots.end());
  if (all.back().x > kMaxSupportFactor * a) {
    throw ConstructionError("support radius exceeds 64 a");
  }
  return SplineExtension(f, std::move(all));
}

Classification classify_extension(const SplineExtension& e, int budget, std::uint64_t seed) {
  const double c = e.support_radius();
  std::vector<double> samples(kPolyaSamples + 1);
  for (int k = 0; k <= kPolyaSamples; ++k) samples[k] = e(c * k / kPolyaSamples);
  Classification out{ExtensionClass::undecided, polya_criterion(samples, c / kPolyaSamples),
                     {}, 0.0, 0};
  if (out.polya.pass) {
    out.verdict = ExtensionClass::polya_pd;
    return out;
  }
  // Deterministic candidate list in priority order.
  std::vector<std::vector<double>> candidates;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int size : {8, 16, 32, 64}) {
    if (size > budget) break;
    for (double span : {0.5 * c, c, 2.0 * c, 4.0 * c}) {
      std::vector<double> uniform(size);
      for (int k = 0; k < size; ++k) uniform[k] = span * k / (size - 1);
      candidates.push_back(std::move(uniform));
      const double offset = unit(rng);
      std::vector<double> lds(size);
      for (int k = 0; k < size; ++k) {
        lds[k] = span * std::fmod(offset + k * golden, 1.0);
      }
      std::sort(lds.begin(), lds.end());
      candidates.push_back(std::move(lds));
    }
  }
  const PdFunction g = e.as_function();
  std::vector<double> min_eig(candidates.size());
  std::vector<char> indefinite(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t i) {
    const GramReport r = is_pd_grid(g, candidates[i]);
    min_eig[i] = r.min_eigenvalue;
    indefinite[i] = r.verdict == GramVerdict::indefinite;
  });
  out.grids_tried = static_cast<int>(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (indefinite[i]) {
      out.verdict = ExtensionClass::refuted;
      out.witness = candidates[i];
      out.witness_min_eigenvalue = min_eig[i];
      break;
    }
  }
  return out;
}

double extension_density(const SplineExtension& e, double lambda) {
  // (1/pi) int_0^c cos(lambda y) F_ex(y) dy: Gauss-Legendre on the base, with
  // panels of at most 8 radians, and exact integrals on the linear pieces.
  const double a = e.a();
  const double width = std::min(a / 4.0, 8.0 / (std::abs(lambda) + 1.0));
  const QuadratureNodes g = gauss_legendre_breaks({0.0, a}, width, 16);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += g.w[i] * std::cos(lambda * g.x[i]) * e(g.x[i]);
  }
  const auto& k = e.knots();
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const double p = k[i].x;
    const double q = k[i + 1].x;
    const double s = (k[i + 1].value - k[i].value) / (q - p);
    if (std::abs(lambda) * (q - p) < 1.0) {
      const QuadratureNodes h = gauss_legendre_breaks({p, q}, q - p, 16);
      for (std::size_t j = 0; j < h.size(); ++j) {
        acc += h.w[j] * std::cos(lambda * h.x[j]) * (k[i].value + s * (h.x[j] - p));
      }
    } else {
      const auto antiderivative = [&](double y, double v) {
        return v * std::sin(lambda * y) / lambda + s * std::cos(lambda * y) / (lambda * lambda);
      };
      acc += antiderivative(q, k[i + 1].value) - antiderivative(p, k[i].value);
    }
  }
  return acc / kPi;
}

DensityReport extension_density(const SplineExtension& e, const std::vector<double>& lambda) {
  DensityReport r{lambda, std::vector<double>(lambda.size()), 0.0};
  parallel_for(lambda.size(), [&](std::size_t i) { r.values[i] = extension_density(e, lambda[i]); });
  r.min_value = r.values.empty() ? 0.0 : *std::min_element(r.values.begin(), r.values.end());
  return r;
}

SpectralMeasure extension_measure(const SplineExtension& e) {
  const auto& k = e.knots();
  // Slope jumps f'(y-) - f'(y+) give the cos(lambda y) / (pi lambda^2) terms.
  std::vector<CosineTerm> leading;
  leading.push_back({-origin_slope(e.base()) / kPi, 0.0});
  double left = endpoint_slope(e.base());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double right = i + 1 < k.size() ? (k[i + 1].value - k[i].value) / (k[i + 1].x - k[i].x)
                                          : 0.0;
    const double jump = left - right;
    if (jump != 0.0) leading.push_back({jump / kPi, k[i].x});
    left = right;
  }
  // Curvature of the base bounds what the leading terms leave over.
  const double a = e.a();
  const QuadratureNodes g = composite_gauss_legendre(0.0, a, 64, 8);
  double variation = 0.0;
  const double h = a * 1e-4;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = std::clamp(g.x[i], h, a - h);
    const double d2 = (e(x + h) - 2.0 * e(x) + e(x - h)) / (h * h);
    variation += g.w[i] * std::abs(d2);
  }
  DensityComponent c;
  c.id = "callable";
  SplineExtension self = e;
  c.rho = [self](double l) { return extension_density(self, l); };
  c.lo = -std::numeric_limits<double>::infinity();
  c.hi = std::numeric_limits<double>::infinity();
  c.mass = e(0.0);
  c.max_radius = 2000.0;
  c.tail.kind = TailKind::rational;
  c.tail.leading = std::move(leading);
  c.tail.remainder = [variation](double r) { return 2.0 * variation / (kPi * r); };
  return SpectralMeasure::density(std::move(c));
}

}  // namespace pdext
