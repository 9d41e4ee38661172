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

#include "pdext/pd_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdext/errors.hpp"

namespace pdext {

struct PdFunction::Impl {
  Interval domain;
  Kind kind;
  std::optional<CatalogEntry> entry;
  std::shared_ptr<const SampledTable> table;
  Eval eval;
  Eval deriv;
  std::string description;
  bool real_valued;
  bool global;
  double scale;
};

namespace {

constexpr const char* kNames[] = {"F1", "F2", "F3", "F4", "F5", "F6", "F7"};

double sinc_half_sq(double x) {
  // (sin(x/2)/(x/2))^2 with a series near zero.
  const double h = 0.5 * x;
  if (std::abs(h) < 1e-4) {
    const double s = 1.0 - h * h / 6.0;
    return s * s;
  }
  const double s = std::sin(h) / h;
  return s * s;
}

complex interpolate(const SampledTable& t, double x) {
  const auto& xs = t.nodes;
  if (x <= xs.front()) return t.values.front();
  if (x >= xs.back()) return t.values.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - xs.begin());
  const double x0 = xs[j - 1];
  const double x1 = xs[j];
  const double s = (x - x0) / (x1 - x0);
  return (1.0 - s) * t.values[j - 1] + s * t.values[j];
}

}  // namespace

std::string to_string(CatalogId id) { return kNames[static_cast<int>(id) - 1]; }

CatalogId catalog_id_from_string(const std::string& s) {
  for (int i = 0; i < 7; ++i) {
    if (s == kNames[i]) return static_cast<CatalogId>(i + 1);
  }
  throw ArgumentError("unknown catalog id '" + s + "'");
}

const std::vector<CatalogId>& all_catalog_ids() {
  static const std::vector<CatalogId> ids = {CatalogId::F1, CatalogId::F2,
                                             CatalogId::F3, CatalogId::F4,
                                             CatalogId::F5, CatalogId::F6,
                                             CatalogId::F7};
  return ids;
}

double default_half_width(CatalogId id) {
  switch (id) {
    case CatalogId::F2:
    case CatalogId::F4:
      return 0.5;
    case CatalogId::F6:
      return std::numbers::pi / 4.0;
    default:
      return 1.0;
  }
}

complex catalog_value(CatalogId id, double x, double p) {
  switch (id) {
    case CatalogId::F1:
      return 1.0 / (1.0 + x * x);
    case CatalogId::F2:
      return std::max(0.0, 1.0 - std::abs(x));
    case CatalogId::F3:
      return std::exp(-std::abs(x));
    case CatalogId::F4:
      return sinc_half_sq(x);
    case CatalogId::F5:
      return std::exp(-0.5 * x * x);
    case CatalogId::F6:
      return std::cos(x);
    case CatalogId::F7:
      return std::pow(complex(1.0, -x), -p);
  }
  throw ArgumentError("catalog_value: bad id");
}

complex catalog_derivative(CatalogId id, double x, double p) {
  const double sgn = (x > 0.0) - (x < 0.0);
  switch (id) {
    case CatalogId::F1: {
      const double d = 1.0 + x * x;
      return -2.0 * x / (d * d);
    }
    case CatalogId::F2:
      return std::abs(x) < 1.0 ? -sgn : 0.0;
    case CatalogId::F3:
      return -sgn * std::exp(-std::abs(x));
    case CatalogId::F4: {
      const double h = 0.5 * x;
      if (std::abs(h) < 1e-4) return -x / 6.0;
      const double s = std::sin(h) / h;
      const double ds = (std::cos(h) * h - std::sin(h)) / (h * h) * 0.5;
      return 2.0 * s * ds;
    }
    case CatalogId::F5:
      return -x * std::exp(-0.5 * x * x);
    case CatalogId::F6:
      return -std::sin(x);
    case CatalogId::F7:
      return complex(0.0, p) * std::pow(complex(1.0, -x), -p - 1.0);
  }
  throw ArgumentError("catalog_derivative: bad id");
}

PdFunction::PdFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

PdFunction PdFunction::catalog(CatalogId id, std::optional<double> a, double p) {
  const double half = a.value_or(default_half_width(id));
  if (!(half > 0.0)) throw ArgumentError("catalog: half-width must be positive");
  if (id == CatalogId::F7 && !(p > 0.0)) throw ParameterError("F7 needs p > 0");
  const double pp = id == CatalogId::F7 ? p : 1.0;
  auto impl = std::make_shared<Impl>(Impl{
      Interval::symmetric(half), Kind::catalog, CatalogEntry{id, half, pp}, nullptr,
      [id, pp](double x) { return catalog_value(id, x, pp); },
      [id, pp](double x) { return catalog_derivative(id, x, pp); },
      to_string(id), id != CatalogId::F7, true, 1.0});
  return PdFunction(std::move(impl));
}

PdFunction PdFunction::sampled(std::vector<double> nodes, std::vector<complex> values,
                               bool normalize) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw DataError("sampled table needs matching nodes/values, at least 2");
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw DataError("table nodes must increase strictly");
  }
  const Interval domain(nodes.front(), nodes.back());
  if (!domain.is_symmetric(1e-9)) throw ArgumentError("table domain must be symmetric");
  auto table = std::make_shared<SampledTable>(SampledTable{std::move(nodes), std::move(values)});
  double scale = 1.0;
  if (normalize) {
    const complex f0 = interpolate(*table, 0.0);
    if (!(f0.real() > 0.0) || std::abs(f0.imag()) > 1e-12 * f0.real()) {
      throw ArgumentError("sampled table: F(0) must be real and positive");
    }
    scale = 1.0 / f0.real();
    for (auto& v : table->values) v *= scale;
  }
  bool real = true;
  for (const auto& v : table->values) real = real && v.imag() == 0.0;
  std::shared_ptr<const SampledTable> ct = table;
  auto impl = std::make_shared<Impl>(Impl{
      domain, Kind::sampled, std::nullopt, ct,
      [ct](double x) { return interpolate(*ct, x); }, nullptr, "sampled", real,
      false, scale});
  return PdFunction(std::move(impl));
}

PdFunction PdFunction::sampled(std::vector<double> nodes,
                               const std::vector<double>& values, bool normalize) {
  std::vector<complex> v(values.begin(), values.end());
  return sampled(std::move(nodes), std::move(v), normalize);
}

PdFunction PdFunction::from_callable(const Interval& domain, Eval f,
                                     std::string description, bool normalize,
                                     bool real_valued, bool global, Eval derivative) {
  if (!domain.is_symmetric(1e-9)) throw ArgumentError("domain must be symmetric");
  if (!f) throw ArgumentError("from_callable: empty callable");
  double scale = 1.0;
  if (normalize) {
    const complex f0 = f(0.0);
    if (!(f0.real() > 0.0) || std::abs(f0.imag()) > 1e-12 * f0.real()) {
      throw ArgumentError("from_callable: F(0) must be real and positive");
    }
    scale = 1.0 / f0.real();
  }
  Eval eval = f;
  Eval deriv = derivative;
  if (scale != 1.0) {
    eval = [f, scale](double x) { return scale * f(x); };
    if (derivative) deriv = [derivative, scale](double x) { return scale * derivative(x); };
  }
  auto impl = std::make_shared<Impl>(Impl{domain, Kind::composite, std::nullopt, nullptr,
                                          std::move(eval), std::move(deriv),
                                          std::move(description), real_valued, global,
                                          scale});
  return PdFunction(std::move(impl));
}

PdFunction PdFunction::constant(const Interval& domain, double value) {
  return from_callable(
      domain, [value](double) { return complex(value, 0.0); }, "constant", false, true,
      true, [](double) { return complex(0.0, 0.0); });
}

complex PdFunction::operator()(double x) const {
  if (!impl_->global && !impl_->domain.contains_closed(x)) {
    throw DomainError("evaluation at " + std::to_string(x) + " outside " +
                      impl_->domain.to_string());
  }
  return impl_->eval(x);
}

std::optional<complex> PdFunction::derivative(double x) const {
  if (!impl_->deriv) return std::nullopt;
  return impl_->deriv(x);
}

const Interval& PdFunction::domain() const { return impl_->domain; }
PdFunction::Kind PdFunction::kind() const { return impl_->kind; }
const std::optional<CatalogEntry>& PdFunction::catalog_entry() const { return impl_->entry; }
const SampledTable* PdFunction::table() const { return impl_->table.get(); }
const std::string& PdFunction::description() const { return impl_->description; }
bool PdFunction::real_valued() const { return impl_->real_valued; }
bool PdFunction::global() const { return impl_->global; }
double PdFunction::scale() const { return impl_->scale; }

complex evaluate(const PdFunction& f, double x) { return f(x); }

PdFunction restrict(const PdFunction& f, const Interval& sub) {
  if (!sub.is_symmetric(1e-9)) throw ArgumentError("restrict: sub-interval not symmetric");
  if (!f.domain().contains(sub)) throw ArgumentError("restrict: sub-interval not contained");
  auto impl = std::make_shared<PdFunction::Impl>(*f.impl_);
  impl->domain = sub;
  if (impl->entry) impl->entry->a = sub.hi();
  return PdFunction(std::move(impl));
}

RealImagSplit split_real_imag(const PdFunction& f) {
  auto d = [f](double x) -> complex {
    auto v = f.derivative(x);
    return v ? complex(v->real(), 0.0) : complex(0.0, 0.0);
  };
  PdFunction even = PdFunction::from_callable(
      f.domain(), [f](double x) { return complex(f(x).real(), 0.0); },
      "Re " + f.description(), false, true, f.global(),
      f.derivative(0.0) ? PdFunction::Eval(d) : nullptr);
  return {std::move(even), [f](double x) { return f(x).imag(); }};
}

PdFunction product(const PdFunction& f, const PdFunction& g) {
  auto common = f.domain().intersect(g.domain());
  if (!common) throw ArgumentError("product: domains do not intersect");
  const double a = std::min(-common->lo(), common->hi());
  if (!(a > 0.0)) throw ArgumentError("product: no symmetric intersection");
  PdFunction::Eval deriv = nullptr;
  if (f.derivative(0.0) && g.derivative(0.0)) {
    deriv = [f, g](double x) { return *f.derivative(x) * g(x) + f(x) * *g.derivative(x); };
  }
  return PdFunction::from_callable(
      Interval::symmetric(a), [f, g](double x) { return f(x) * g(x); },
      f.description() + "*" + g.description(), false,
      f.real_valued() && g.real_valued(), f.global() && g.global(), deriv);
}

PdFunction conjugate_reflect(const PdFunction& f) {
  PdFunction::Eval deriv = nullptr;
  if (f.derivative(0.0)) deriv = [f](double x) { return std::conj(*f.derivative(x)); };
  return PdFunction::from_callable(
      f.domain(), [f](double x) { return std::conj(f(x)); },
      "conj " + f.description(), false, f.real_valued(), f.global(), deriv);
}

PdFunction dilate(const PdFunction& f, double s) {
  if (!(s > 0.0)) throw ArgumentError("dilate: scale must be positive");
  PdFunction::Eval deriv = nullptr;
  if (f.derivative(0.0)) deriv = [f, s](double x) { return s * *f.derivative(s * x); };
  const Interval dom = f.domain().bounded() ? Interval::symmetric(f.half_width() / s)
                                            : f.domain();
  return PdFunction::from_callable(
      dom, [f, s](double x) { return f(s * x); }, f.description() + " dilated", false,
      f.real_valued(), f.global(), deriv);
}

}  // namespace pdext
