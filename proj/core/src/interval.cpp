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

#include "pdext/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdext/errors.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
    throw ArgumentError("interval requires lo < hi, got " + to_string());
  }
}

Interval Interval::symmetric(double a) {
  if (!(a > 0.0)) throw ArgumentError("symmetric interval needs a > 0");
  return Interval(-a, a);
}

Interval Interval::real_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return Interval(-inf, inf);
}

bool Interval::bounded() const { return std::isfinite(lo_) && std::isfinite(hi_); }

bool Interval::contains_closed(double x, double slack) const {
  const double tol_lo = slack * std::max(1.0, std::abs(lo_));
  const double tol_hi = slack * std::max(1.0, std::abs(hi_));
  return x >= lo_ - tol_lo && x <= hi_ + tol_hi;
}

bool Interval::contains(const Interval& other, double slack) const {
  return contains_closed(other.lo_, slack) && contains_closed(other.hi_, slack);
}

bool Interval::is_symmetric(double tol) const {
  if (std::isinf(lo_) || std::isinf(hi_)) return lo_ == -hi_;
  return std::abs(lo_ + hi_) <= tol * std::max(1.0, hi_);
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  const double lo = std::max(lo_, other.lo_);
  const double hi = std::min(hi_, other.hi_);
  if (!(lo < hi)) return std::nullopt;
  return Interval(lo, hi);
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << '(' << lo_ << ", " << hi_ << ')';
  return os.str();
}

GridSpec::GridSpec(Interval interval, std::vector<double> nodes,
                   std::vector<double> weights, GridRule rule)
    : interval_(interval),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      rule_(rule) {}

namespace {

void require_grid(const Interval& interval, int n, int minimum) {
  if (!interval.bounded()) throw ArgumentError("grid needs a bounded interval");
  if (n < minimum) throw ArgumentError("grid needs at least " + std::to_string(minimum) + " nodes");
}

}  // namespace

GridSpec GridSpec::midpoint(const Interval& interval, int n) {
  require_grid(interval, n, 1);
  std::vector<double> w(n, interval.length() / n);
  return GridSpec(interval, uniform_points(interval, n), std::move(w),
                  GridRule::midpoint);
}

GridSpec GridSpec::gauss_legendre(const Interval& interval, int n) {
  require_grid(interval, n, 1);
  QuadratureNodes q = pdext::gauss_legendre(n, interval.lo(), interval.hi());
  return GridSpec(interval, std::move(q.x), std::move(q.w),
                  GridRule::gauss_legendre);
}

GridSpec GridSpec::trapezoid(const Interval& interval, int n) {
  require_grid(interval, n, 2);
  QuadratureNodes q = pdext::trapezoid(interval.lo(), interval.hi(), n - 1);
  return GridSpec(interval, std::move(q.x), std::move(q.w), GridRule::trapezoid);
}

double GridSpec::spacing() const {
  double h = 0.0;
  for (std::size_t i = 1; i < nodes_.size(); ++i) h = std::max(h, nodes_[i] - nodes_[i - 1]);
  return h;
}

std::vector<double> uniform_points(const Interval& interval, int n) {
  std::vector<double> x(n);
  const double h = interval.length() / n;
  for (int k = 0; k < n; ++k) x[k] = interval.lo() + (k + 0.5) * h;
  return x;
}

std::vector<double> closed_uniform_points(double lo, double hi, int n) {
  std::vector<double> x(n + 1);
  const double h = (hi - lo) / n;
  for (int k = 0; k <= n; ++k) x[k] = lo + k * h;
  x[n] = hi;
  return x;
}

}  // namespace pdext
