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

#ifndef PDEXT_QUADRATURE_HPP_
#define PDEXT_QUADRATURE_HPP_

#include <vector>

namespace pdext {

/// Nodes and weights of a quadrature rule.
struct QuadratureNodes {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }
  void append(const QuadratureNodes& other);

  template <class F>
  auto integrate(F&& f) const -> decltype(f(0.0) * 1.0) {
    using R = decltype(f(0.0) * 1.0);
    R acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
    return acc;
  }
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureNodes gauss_legendre(int n, double a, double b);

/// Composite Gauss-Legendre with `panels` equal panels of `order` points.
QuadratureNodes composite_gauss_legendre(double a, double b, int panels,
                                         int order = 16);

/// Composite Gauss-Legendre over consecutive break points; each gap is split
/// into panels no wider than max_width.
QuadratureNodes gauss_legendre_breaks(const std::vector<double>& breaks,
                                      double max_width, int order = 16);

/// Closed trapezoid rule with m intervals.
QuadratureNodes trapezoid(double a, double b, int m);

/// Closed Simpson rule; m is rounded up to an even count.
QuadratureNodes simpson(double a, double b, int m);

}  // namespace pdext

#endif  // PDEXT_QUADRATURE_HPP_
