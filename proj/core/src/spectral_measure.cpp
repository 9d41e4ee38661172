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

#include "pdext/spectral_measure.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>

#include <cmath>
#include <limits>
#include <numbers>

#include "pdext/errors.hpp"

namespace pdext {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms,
                                 std::vector<DensityComponent> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  for (const Atom& a : atoms_) {
    if (!(a.weight > 0.0) || !std::isfinite(a.location)) {
      throw ArgumentError("atoms need finite location and positive weight");
    }
    total_mass_ += a.weight;
  }
  for (const DensityComponent& d : densities_) {
    if (!d.rho) throw ArgumentError("density component '" + d.id + "' has no map");
    if (!(d.mass >= 0.0) || !std::isfinite(d.mass)) {
      throw ArgumentError("density component '" + d.id + "' needs finite mass");
    }
    if (!(d.lo < d.hi)) throw ArgumentError("density support must be nonempty");
    total_mass_ += d.mass;
  }
}

SpectralMeasure SpectralMeasure::dirac(double location, double weight) {
  return SpectralMeasure({{location, weight}}, {});
}

SpectralMeasure SpectralMeasure::density(DensityComponent component) {
  return SpectralMeasure({}, {std::move(component)});
}

DensityComponent SpectralMeasure::laplace() {
  DensityComponent c;
  c.id = "laplace";
  c.rho = [](double l) { return 0.5 * std::exp(-std::abs(l)); };
  c.lo = -kInf;
  c.hi = kInf;
  c.kinks = {0.0};
  c.mass = 1.0;
  c.tail = {TailKind::exponential, {}, [](double r) { return std::exp(-r); }};
  return c;
}

DensityComponent SpectralMeasure::fejer() {
  DensityComponent c;
  c.id = "fejer";
  c.rho = [](double l) {
    const double h = 0.5 * l;
    if (std::abs(h) < 1e-4) {
      const double s = 1.0 - h * h / 6.0;
      return s * s / (2.0 * kPi);
    }
    const double s = std::sin(h) / h;
    return s * s / (2.0 * kPi);
  };
  c.lo = -kInf;
  c.hi = kInf;
  c.mass = 1.0;
  // (1 - cos l) / (pi l^2) exactly.
  c.tail = {TailKind::rational, {{1.0 / kPi, 0.0}, {-1.0 / kPi, 1.0}},
            [](double) { return 0.0; }};
  return c;
}

DensityComponent SpectralMeasure::cauchy() {
  DensityComponent c;
  c.id = "cauchy";
  c.rho = [](double l) { return 1.0 / (kPi * (1.0 + l * l)); };
  c.lo = -kInf;
  c.hi = kInf;
  c.mass = 1.0;
  c.tail = {TailKind::rational, {{1.0 / kPi, 0.0}},
            [](double r) { return 2.0 / (3.0 * kPi * r * r * r); }};
  return c;
}

DensityComponent SpectralMeasure::triangle() {
  DensityComponent c;
  c.id = "triangle";
  c.rho = [](double l) { return std::max(0.0, 1.0 - std::abs(l)); };
  c.lo = -1.0;
  c.hi = 1.0;
  c.kinks = {0.0};
  c.mass = 1.0;
  return c;
}

DensityComponent SpectralMeasure::gauss() {
  DensityComponent c;
  c.id = "gauss";
  c.rho = [](double l) { return std::exp(-0.5 * l * l) / std::sqrt(2.0 * kPi); };
  c.lo = -kInf;
  c.hi = kInf;
  c.mass = 1.0;
  c.tail = {TailKind::gaussian, {}, [](double r) { return std::erfc(r / std::sqrt(2.0)); }};
  return c;
}

DensityComponent SpectralMeasure::gamma(double p) {
  if (!(p > 0.0)) throw ParameterError("gamma density needs p > 0");
  DensityComponent c;
  c.id = "gamma";
  c.shape = p;
  const double lg = std::lgamma(p);
  c.rho = [p, lg](double l) {
    if (l <= 0.0) return (l == 0.0 && p == 1.0) ? 1.0 : 0.0;
    return std::exp((p - 1.0) * std::log(l) - l - lg);
  };
  c.lo = 0.0;
  c.hi = kInf;
  c.mass = 1.0;
  c.tail = {TailKind::exponential, {}, [p](double r) { return gsl_sf_gamma_inc_Q(p, r); }};
  if (p < 2.0) {
    // lambda = u^(1/p) removes the endpoint singularity of lambda^(p-1).
    QuadratureNodes u = gauss_legendre(64, 0.0, 1.0);
    QuadratureNodes head;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double l = std::pow(u.x[i], 1.0 / p);
      head.x.push_back(l);
      head.w.push_back(u.w[i] / p * std::exp(-l - lg));
    }
    c.head = std::move(head);
    c.head_end = 1.0;
  }
  return c;
}

DensityComponent SpectralMeasure::table(std::vector<double> nodes,
                                        std::vector<double> values) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw DataError("density table needs matching nodes/values, at least 2");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (values[i] < 0.0) throw DataError("density table values must be nonnegative");
    if (i > 0) {
      if (!(nodes[i] > nodes[i - 1])) throw DataError("density table nodes must increase");
      mass += 0.5 * (values[i] + values[i - 1]) * (nodes[i] - nodes[i - 1]);
    }
  }
  DensityComponent c;
  c.id = "table";
  c.table_nodes = nodes;
  c.table_values = values;
  c.lo = nodes.front();
  c.hi = nodes.back();
  c.kinks.assign(nodes.begin() + 1, nodes.end() - 1);
  c.mass = mass;
  c.rho = [nodes = std::move(nodes), values = std::move(values)](double l) {
    if (l < nodes.front() || l > nodes.back()) return 0.0;
    auto it = std::upper_bound(nodes.begin(), nodes.end(), l);
    if (it == nodes.end()) return values.back();
    const std::size_t j = static_cast<std::size_t>(it - nodes.begin());
    const double s = (l - nodes[j - 1]) / (nodes[j] - nodes[j - 1]);
    return (1.0 - s) * values[j - 1] + s * values[j];
  };
  return c;
}

DensityComponent SpectralMeasure::named(const std::string& id, double weight,
                                        double scale, double shape) {
  DensityComponent base;
  if (id == "laplace") {
    base = laplace();
  } else if (id == "fejer") {
    base = fejer();
  } else if (id == "cauchy") {
    base = cauchy();
  } else if (id == "triangle") {
    base = triangle();
  } else if (id == "gauss") {
    base = gauss();
  } else if (id == "gamma") {
    base = gamma(shape);
  } else {
    throw ArgumentError("unknown density id '" + id + "'");
  }
  return transform_component(base, weight, scale);
}

DensityComponent transform_component(const DensityComponent& c, double w, double s) {
  if (!(w > 0.0) || !(s > 0.0)) throw ArgumentError("density transform needs w, s > 0");
  if (w == 1.0 && s == 1.0) return c;
  DensityComponent out = c;
  out.weight = c.weight * w;
  out.scale = c.scale * s;
  out.rho = [rho = c.rho, w, s](double l) { return w * rho(l / s) / s; };
  out.lo = c.lo * s;
  out.hi = c.hi * s;
  out.center = c.center * s;
  out.max_radius = c.max_radius * s;
  for (double& k : out.kinks) k *= s;
  for (double& t : out.table_nodes) t *= s;
  for (double& v : out.table_values) v *= w / s;
  out.mass = c.mass * w;
  for (CosineTerm& t : out.tail.leading) {
    t.amplitude *= w * s;
    t.frequency /= s;
  }
  if (c.tail.remainder) {
    out.tail.remainder = [r = c.tail.remainder, w, s](double big) { return w * r(big / s); };
  }
  if (c.head) {
    for (double& x : out.head->x) x *= s;
    for (double& m : out.head->w) m *= w;
    out.head_end = c.head_end * s;
  }
  return out;
}

DensityComponent shift_component(const DensityComponent& c, double t, double w) {
  if (!(w > 0.0)) throw ArgumentError("shift_component needs w > 0");
  DensityComponent out = transform_component(c, w, 1.0);
  if (t == 0.0) return out;
  out.id = c.id == "table" ? "table" : "callable";
  out.rho = [rho = out.rho, t](double l) { return rho(l - t); };
  out.lo += t;
  out.hi += t;
  out.center += t;
  for (double& k : out.kinks) k += t;
  for (double& x : out.table_nodes) x += t;
  if (out.head) {
    for (double& x : out.head->x) x += t;
    out.head_end += t;
  }
  return out;
}

SpectralMeasure SpectralMeasure::catalog(CatalogId id, double p) {
  switch (id) {
    case CatalogId::F1:
      return density(laplace());
    case CatalogId::F2:
      return density(fejer());
    case CatalogId::F3:
      return density(cauchy());
    case CatalogId::F4:
      return density(triangle());
    case CatalogId::F5:
      return density(gauss());
    case CatalogId::F6:
      return SpectralMeasure({{-1.0, 0.5}, {1.0, 0.5}}, {});
    case CatalogId::F7:
      return density(gamma(p));
  }
  throw ArgumentError("catalog measure: bad id");
}

double SpectralMeasure::density_at(double lambda) const {
  double acc = 0.0;
  for (const DensityComponent& d : densities_) {
    if (lambda >= d.lo && lambda <= d.hi) acc += d.rho(lambda);
  }
  return acc;
}

SpectralMeasure SpectralMeasure::pushforward_scaled(double s) const {
  if (!(s > 0.0)) throw ArgumentError("pushforward_scaled: s must be positive");
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.location *= s;
  std::vector<DensityComponent> dens;
  for (const DensityComponent& d : densities_) dens.push_back(transform_component(d, 1.0, s));
  return SpectralMeasure(std::move(atoms), std::move(dens));
}

SpectralMeasure SpectralMeasure::scaled_mass(double c) const {
  if (!(c > 0.0)) throw ArgumentError("scaled_mass: factor must be positive");
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.weight *= c;
  std::vector<DensityComponent> dens;
  for (const DensityComponent& d : densities_) dens.push_back(transform_component(d, c, 1.0));
  return SpectralMeasure(std::move(atoms), std::move(dens));
}

SpectralMeasure SpectralMeasure::operator+(const SpectralMeasure& other) const {
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  std::vector<DensityComponent> dens = densities_;
  dens.insert(dens.end(), other.densities_.begin(), other.densities_.end());
  return SpectralMeasure(std::move(atoms), std::move(dens));
}

}  // namespace pdext
