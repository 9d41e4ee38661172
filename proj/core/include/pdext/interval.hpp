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

#ifndef PDEXT_INTERVAL_HPP_
#define PDEXT_INTERVAL_HPP_

#include <optional>
#include <string>
#include <vector>

namespace pdext {

/// Open interval (lo, hi); endpoints may be infinite.
class Interval {
 public:
  Interval(double lo, double hi);

  /// (-a, a).
  static Interval symmetric(double a);
  static Interval real_line();

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  double center() const { return 0.5 * (lo_ + hi_); }
  bool bounded() const;

  bool contains(double x) const { return lo_ < x && x < hi_; }
  /// Membership in the closure, with a relative slack for round-off.
  bool contains_closed(double x, double slack = 1e-12) const;
  /// Closure containment of another interval.
  bool contains(const Interval& other, double slack = 1e-12) const;
  bool is_symmetric(double tol = 1e-12) const;
  std::optional<Interval> intersect(const Interval& other) const;

  std::string to_string() const;

 private:
  double lo_;
  double hi_;
};

enum class GridRule { midpoint, gauss_legendre, trapezoid };

/// Quadrature grid over a bounded interval. Midpoint and Gauss-Legendre nodes
/// are interior; the trapezoid rule includes both endpoints (a grid of the
/// closure).
class GridSpec {
 public:
  static GridSpec midpoint(const Interval& interval, int n);
  static GridSpec gauss_legendre(const Interval& interval, int n);
  static GridSpec trapezoid(const Interval& interval, int n);

  const Interval& interval() const { return interval_; }
  int n() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  GridRule rule() const { return rule_; }
  /// Largest gap between consecutive nodes.
  double spacing() const;

 private:
  GridSpec(Interval interval, std::vector<double> nodes,
           std::vector<double> weights, GridRule rule);

  Interval interval_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  GridRule rule_;
};

/// n equally spaced points lo + (k + 1/2) (hi - lo) / n.
std::vector<double> uniform_points(const Interval& interval, int n);
/// n + 1 equally spaced points including both endpoints.
std::vector<double> closed_uniform_points(double lo, double hi, int n);

}  // namespace pdext

#endif  // PDEXT_INTERVAL_HPP_
