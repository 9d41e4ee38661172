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

#include "pdext/bochner.hpp"

#include <gsl/gsl_fft_complex.h>
#include <gsl/gsl_sf_expint.h>
#include <gsl/gsl_sf_psi.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pdext/errors.hpp"
#include "pdext/parallel.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxAutoRadius = 1e6;

// int_R^inf cos(w l) / l^2 dl.
double cos_over_square_tail(double w, double r) {
  const double aw = std::abs(w);
  if (aw == 0.0) return 1.0 / r;
  return std::cos(aw * r) / r - aw * (0.5 * kPi - gsl_sf_Si(aw * r));
}

QuadratureNodes gap_rule(double lo, double hi, const QuadratureSpec& q) {
  const double units = (hi - lo) * q.nodes_per_unit;
  switch (q.rule) {
    case QuadratureRule::trapezoid:
      return trapezoid(lo, hi, std::max(2, static_cast<int>(std::ceil(units))));
    case QuadratureRule::simpson:
      return simpson(lo, hi, std::max(2, static_cast<int>(std::ceil(units))));
    case QuadratureRule::gauss_legendre:
      return composite_gauss_legendre(lo, hi,
                                      std::max(1, static_cast<int>(std::ceil(units / 8.0))), 8);
  }
  throw ArgumentError("unknown quadrature rule");
}

void append_component(const DensityComponent& c, const QuadratureSpec& q,
                      SpectralNodes& out) {
  const bool bounded = std::isfinite(c.lo) && std::isfinite(c.hi);
  double lo = c.lo;
  double hi = c.hi;
  double radius = kInf;
  if (!bounded) {
    radius = truncation_radius(c, q);
    lo = std::max(lo, c.center - radius);
    hi = std::min(hi, c.center + radius);
  }
  if (c.head) {
    for (std::size_t i = 0; i < c.head->size(); ++i) {
      out.lambda.push_back(c.head->x[i]);
      out.mass.push_back(c.head->w[i]);
    }
    lo = std::max(lo, c.head_end);
  }
  std::vector<double> breaks = {lo};
  for (double k : c.kinks) {
    if (k > lo && k < hi) breaks.push_back(k);
  }
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    QuadratureNodes g = gap_rule(breaks[i], breaks[i + 1], q);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double m = g.w[j] * c.rho(g.x[j]);
      if (m == 0.0) continue;
      out.lambda.push_back(g.x[j]);
      out.mass.push_back(m);
    }
  }
  if (!bounded) {
    const bool two_sided = std::isinf(c.lo) && std::isinf(c.hi);
    if (two_sided) {
      for (const CosineTerm& t : c.tail.leading) {
        out.tails.push_back({t.amplitude, t.frequency, c.center, radius});
      }
    }
    out.tail_bound += c.tail.remainder ? c.tail.remainder(radius) : kInf;
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(radius >= 0.0)) throw ConfigurationError("quadrature radius must be >= 0");
  if (nodes_per_unit < 8) throw ConfigurationError("quadrature needs >= 8 nodes per unit");
  if (!(tol > 0.0)) throw ConfigurationError("quadrature tolerance must be positive");
}

double truncation_radius(const DensityComponent& c, const QuadratureSpec& q) {
  if (std::isfinite(c.lo) && std::isfinite(c.hi)) {
    return std::max(std::abs(c.lo - c.center), std::abs(c.hi - c.center));
  }
  if (q.radius > 0.0) return q.radius;
  if (!c.tail.remainder) {
    throw ConfigurationError("density '" + c.id +
                             "' has no tail descriptor; set a truncation radius");
  }
  double r = 8.0;
  const double cap = std::min(kMaxAutoRadius, c.max_radius);
  while (r < cap && c.tail.remainder(r) >= q.tol / 10.0) r *= 2.0;
  return std::min(r, cap);
}

SpectralNodes discretize(const SpectralMeasure& mu, const QuadratureSpec& q) {
  q.validate();
  SpectralNodes out;
  for (const Atom& a : mu.atoms()) {
    out.lambda.push_back(a.location);
    out.mass.push_back(a.weight);
  }
  for (const DensityComponent& c : mu.densities()) append_component(c, q, out);
  return out;
}

complex tail_transform(const std::vector<TailPiece>& tails, double x) {
  complex acc = 0.0;
  for (const TailPiece& t : tails) {
    const double v = cos_over_square_tail(x + t.frequency, t.radius) +
                     cos_over_square_tail(x - t.frequency, t.radius);
    acc += t.amplitude * v * std::polar(1.0, x * t.center);
  }
  return acc;
}

complex bochner_transform(const SpectralNodes& nodes, double x) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < nodes.lambda.size(); ++j) {
    const double ph = nodes.lambda[j] * x;
    re += nodes.mass[j] * std::cos(ph);
    im += nodes.mass[j] * std::sin(ph);
  }
  return complex(re, im) + tail_transform(nodes.tails, x);
}

TransformValue bochner_transform(const SpectralMeasure& mu, double x,
                                 const QuadratureSpec& q) {
  const SpectralNodes nodes = discretize(mu, q);
  return {bochner_transform(nodes, x), nodes.tail_bound};
}

std::vector<complex> bochner_transform(const SpectralMeasure& mu,
                                       const std::vector<double>& xs,
                                       const QuadratureSpec& q) {
  const SpectralNodes nodes = discretize(mu, q);
  std::vector<complex> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = bochner_transform(nodes, xs[i]); });
  return out;
}

ExtVerdict verify_ext(const PdFunction& f, const SpectralMeasure& mu,
                      const std::vector<double>& grid, double tol,
                      const QuadratureSpec& q) {
  const std::vector<complex> t = bochner_transform(mu, grid, q);
  ExtVerdict v{true, 0.0, grid.empty() ? 0.0 : grid.front()};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = std::abs(t[i] - f(grid[i]));
    if (e > v.sup_error) {
      v.sup_error = e;
      v.worst_x = grid[i];
    }
  }
  v.pass = v.sup_error <= tol;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

SpectralNodes discretize_density(const DensityComponent& c, const QuadratureSpec& q) {
  SpectralNodes n;
  append_component(c, q, n);
  return n;
}

CosineTerm convolved_term(const CosineTerm& t, const SpectralMeasure& other,
                          const QuadratureSpec& q) {
  // A cos(k l) / l^2 smoothed by a symmetric measure picks up its transform at k.
  const double factor = t.frequency == 0.0
                            ? other.total_mass()
                            : bochner_transform(discretize(other, q), t.frequency).real();
  return {t.amplitude * factor, t.frequency};
}

// Trapezoid samples of both factors on one uniform lattice, convolved by FFT.
void convolve_uniform(const DensityComponent& a, double ra, const DensityComponent& b,
                      double rb, double h, double lo, double hi, std::vector<double>& grid,
                      std::vector<double>& values) {
  const auto sample = [h](const DensityComponent& c, double r, double& start) {
    start = std::max(c.lo, c.center - r);
    const double end = std::min(c.hi, c.center + r);
    const auto n = static_cast<std::size_t>(std::ceil((end - start) / h)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double l = start + static_cast<double>(i) * h;
      v[i] = l <= c.hi ? c.rho(l) : 0.0;
    }
    v.front() *= 0.5;
    if (start + static_cast<double>(n - 1) * h <= end + 1e-12 * h) v.back() *= 0.5;
    return v;
  };
  double sa = 0.0;
  double sb = 0.0;
  const std::vector<double> va = sample(a, ra, sa);
  const std::vector<double> vb = sample(b, rb, sb);
  const std::size_t len = va.size() + vb.size() - 1;
  std::size_t n = 1;
  while (n < len) n <<= 1;
  std::vector<double> fa(2 * n, 0.0);
  std::vector<double> fb(2 * n, 0.0);
  for (std::size_t i = 0; i < va.size(); ++i) fa[2 * i] = va[i];
  for (std::size_t i = 0; i < vb.size(); ++i) fb[2 * i] = vb[i];
  gsl_fft_complex_radix2_forward(fa.data(), 1, n);
  gsl_fft_complex_radix2_forward(fb.data(), 1, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double re = fa[2 * k] * fb[2 * k] - fa[2 * k + 1] * fb[2 * k + 1];
    const double im = fa[2 * k] * fb[2 * k + 1] + fa[2 * k + 1] * fb[2 * k];
    fa[2 * k] = re;
    fa[2 * k + 1] = im;
  }
  gsl_fft_complex_radix2_inverse(fa.data(), 1, n);
  grid.clear();
  values.clear();
  for (std::size_t k = 0; k < len; ++k) {
    const double l = sa + sb + static_cast<double>(k) * h;
    if (l < lo - 1e-12 || l > hi + 1e-12) continue;
    grid.push_back(l);
    values.push_back(std::max(0.0, h * fa[2 * k]));
  }
  if (grid.size() < 2) throw NumericError("convolution grid is too coarse");
}

DensityComponent convolve_densities(const DensityComponent& a, const DensityComponent& b,
                                    const QuadratureSpec& q) {
  for (const DensityComponent* c : {&a, &b}) {
    const bool bounded = std::isfinite(c->lo) && std::isfinite(c->hi);
    if (!bounded && !c->tail.remainder && !(q.radius > 0.0)) {
      throw ConfigurationError("convolution factor '" + c->id + "' has no tail descriptor");
    }
  }
  const double ra = truncation_radius(a, q);
  const double rb = truncation_radius(b, q);
  double lo = std::max(a.lo, a.center - ra) + std::max(b.lo, b.center - rb);
  double hi = std::min(a.hi, a.center + ra) + std::min(b.hi, b.center + rb);
  const double center = a.center + b.center;
  const bool unbounded = !(std::isfinite(a.lo) && std::isfinite(a.hi) &&
                           std::isfinite(b.lo) && std::isfinite(b.hi));
  if (unbounded) {
    const double r = std::max(ra, rb);
    lo = std::max(lo, center - r);
    hi = std::min(hi, center + r);
  }
  std::vector<double> grid;
  std::vector<double> values;
  if (a.head || b.head) {
    // Singular endpoints need the adapted nodes of the first factor.
    const SpectralNodes na = discretize_density(a, q);
    const int m = std::max(2, static_cast<int>(std::ceil((hi - lo) * q.nodes_per_unit)));
    grid = closed_uniform_points(lo, hi, m);
    values.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
      double acc = 0.0;
      for (std::size_t j = 0; j < na.lambda.size(); ++j) {
        const double t = grid[k] - na.lambda[j];
        if (t >= b.lo && t <= b.hi) acc += na.mass[j] * b.rho(t);
      }
      values[k] = std::max(0.0, acc);
    });
  } else {
    convolve_uniform(a, ra, b, rb, 1.0 / q.nodes_per_unit, lo, hi, grid, values);
  }

  DensityComponent c = SpectralMeasure::table(grid, values);
  c.mass = a.mass * b.mass;
  c.center = center;
  if (unbounded) {
    c.id = "callable";
    const SpectralMeasure ma = SpectralMeasure::density(a);
    const SpectralMeasure mb = SpectralMeasure::density(b);
    std::vector<CosineTerm> leading;
    for (const CosineTerm& t : a.tail.leading) leading.push_back(convolved_term(t, mb, q));
    for (const CosineTerm& t : b.tail.leading) leading.push_back(convolved_term(t, ma, q));
    double total = 0.0;
    for (const CosineTerm& t : leading) total += std::abs(t.amplitude);
    c.lo = -kInf;
    c.hi = kInf;
    c.kinks.clear();
    c.max_radius = std::min(center - lo, hi - center);
    c.tail.kind = TailKind::rational;
    c.tail.leading = leading;
    c.tail.remainder = [total](double r) { return 4.0 * total / r; };
    auto table_rho = c.rho;
    c.rho = [table_rho, leading, lo, hi, center](double l) {
      if (l >= lo && l <= hi) return table_rho(l);
      const double u = l - center;
      double acc = 0.0;
      for (const CosineTerm& t : leading) acc += t.amplitude * std::cos(t.frequency * u) / (u * u);
      return std::max(0.0, acc);
    };
  }
  return c;
}

}  // namespace

SpectralMeasure convolve(const SpectralMeasure& a, const SpectralMeasure& b,
                         const QuadratureSpec& q) {
  q.validate();
  std::vector<Atom> atoms;
  std::vector<DensityComponent> dens;
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) atoms.push_back({x.location + y.location, x.weight * y.weight});
    for (const DensityComponent& d : b.densities()) {
      dens.push_back(shift_component(d, x.location, x.weight));
    }
  }
  for (const DensityComponent& d : a.densities()) {
    for (const Atom& y : b.atoms()) dens.push_back(shift_component(d, y.location, y.weight));
    for (const DensityComponent& e : b.densities()) dens.push_back(convolve_densities(d, e, q));
  }
  return SpectralMeasure(std::move(atoms), std::move(dens));
}

PeriodicDensity convolve(const DiracComb& comb, const SpectralMeasure& mu,
                         const QuadratureSpec& q) {
  q.validate();
  if (!(comb.period > 0.0)) throw ArgumentError("Dirac comb period must be positive");
  if (!mu.atoms().empty()) throw ArgumentError("periodization needs an absolutely continuous measure");
  const double p = comb.period;
  const int m = std::max(8, static_cast<int>(std::ceil(p * q.nodes_per_unit)));
  PeriodicDensity out{p, {}, {}, mu.total_mass()};
  for (int k = 0; k < m; ++k) out.nodes.push_back(p * k / m);
  out.values.assign(m, 0.0);
  for (const DensityComponent& c : mu.densities()) {
    const double r = truncation_radius(c, q);
    const long reach = static_cast<long>(std::ceil((r + std::abs(c.center)) / p)) + 1;
    const bool two_sided = std::isinf(c.lo) && std::isinf(c.hi);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t k) {
      const double t = out.nodes[k];
      double acc = 0.0;
      for (long n = -reach; n <= reach; ++n) {
        const double l = t - n * p;
        if (l >= c.lo && l <= c.hi) acc += c.rho(l);
      }
      if (two_sided) {
        // Remaining lattice terms of the 1/l^2 part via the trigamma function.
        const double u = (t - c.center) / p;
        for (const CosineTerm& term : c.tail.leading) {
          if (term.frequency != 0.0) continue;
          acc += term.amplitude / (p * p) *
                 (gsl_sf_psi_1(reach + 1.0 - u) + gsl_sf_psi_1(reach + 1.0 + u));
        }
      }
      out.values[k] += acc;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------

InversionReport invert(const std::function<complex(double)>& f, double a0, double b0,
                       const std::vector<double>& t_schedule, double tol) {
  if (!(a0 < b0)) throw ArgumentError("invert: need a0 < b0");
  if (t_schedule.empty()) throw ArgumentError("invert: empty T schedule");
  const double freq = std::max({1.0, std::abs(a0), std::abs(b0)});
  const double width = std::min(0.5, kPi / (2.0 * freq));
  auto kernel = [a0, b0](double x) -> complex {
    if (std::abs(x) * std::max(std::abs(a0), std::abs(b0)) < 1e-6) {
      // Series of (exp(-i x a) - exp(-i x b)) / (i x).
      const double d1 = b0 - a0;
      const double d2 = b0 * b0 - a0 * a0;
      return complex(d1, -0.5 * x * d2);
    }
    return (std::polar(1.0, -x * a0) - std::polar(1.0, -x * b0)) / complex(0.0, x);
  };
  InversionReport rep{0.0, 0.0, {}, {}, false};
  double prev_t = 0.0;
  complex acc = 0.0;
  std::vector<double> sorted = t_schedule;
  std::sort(sorted.begin(), sorted.end());
  for (double t : sorted) {
    if (!(t > prev_t)) continue;
    // Accumulate the new shells [-t, -prev_t] and [prev_t, t].
    const QuadratureNodes shell = gauss_legendre_breaks({prev_t, t}, width, 16);
    for (std::size_t i = 0; i < shell.size(); ++i) {
      const double x = shell.x[i];
      acc += shell.w[i] * (kernel(x) * f(x) + kernel(-x) * f(-x));
    }
    prev_t = t;
    const complex v = acc / (2.0 * kPi);
    rep.t_schedule.push_back(t);
    rep.values.push_back(v.real());
    rep.value = v.real();
    rep.imag = v.imag();
  }
  const std::size_t n = rep.values.size();
  rep.converged = n >= 2 ? std::abs(rep.values[n - 1] - rep.values[n - 2]) <= tol : false;
  return rep;
}

}  // namespace pdext
