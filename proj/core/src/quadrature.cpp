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

#include "pdext/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "pdext/errors.hpp"

namespace pdext {

namespace {

struct ReferenceRule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

const ReferenceRule& reference_rule(int n) {
  static std::mutex mutex;
  static std::map<int, ReferenceRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<size_t>(n));
  if (table == nullptr) throw NumericError("Gauss-Legendre table allocation failed");
  ReferenceRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &rule.x[i],
                                  &rule.w[i], table);
  }
  gsl_integration_glfixed_table_free(table);
  // GSL lists nodes symmetrically; sort for monotone output.
  std::vector<std::size_t> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return rule.x[a] < rule.x[b]; });
  ReferenceRule sorted;
  for (std::size_t i : idx) {
    sorted.x.push_back(rule.x[i]);
    sorted.w.push_back(rule.w[i]);
  }
  return cache.emplace(n, std::move(sorted)).first->second;
}

}  // namespace

void QuadratureNodes::append(const QuadratureNodes& other) {
  x.insert(x.end(), other.x.begin(), other.x.end());
  w.insert(w.end(), other.w.begin(), other.w.end());
}

QuadratureNodes gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be positive");
  const ReferenceRule& ref = reference_rule(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  QuadratureNodes q;
  q.x.resize(n);
  q.w.resize(n);
  for (int i = 0; i < n; ++i) {
    q.x[i] = mid + half * ref.x[i];
    q.w[i] = half * ref.w[i];
  }
  return q;
}

QuadratureNodes composite_gauss_legendre(double a, double b, int panels,
                                         int order) {
  if (panels < 1) throw ArgumentError("composite_gauss_legendre: panels < 1");
  QuadratureNodes q;
  q.x.reserve(static_cast<std::size_t>(panels) * order);
  q.w.reserve(static_cast<std::size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : lo + h;
    q.append(gauss_legendre(order, lo, hi));
  }
  return q;
}

QuadratureNodes gauss_legendre_breaks(const std::vector<double>& breaks,
                                      double max_width, int order) {
  if (max_width <= 0.0) throw ArgumentError("gauss_legendre_breaks: width <= 0");
  QuadratureNodes q;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    if (!(hi > lo)) continue;
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
    q.append(composite_gauss_legendre(lo, hi, panels, order));
  }
  return q;
}

QuadratureNodes trapezoid(double a, double b, int m) {
  if (m < 1) throw ArgumentError("trapezoid: m < 1");
  QuadratureNodes q;
  const double h = (b - a) / m;
  for (int i = 0; i <= m; ++i) {
    q.x.push_back(a + i * h);
    q.w.push_back((i == 0 || i == m) ? 0.5 * h : h);
  }
  return q;
}

QuadratureNodes simpson(double a, double b, int m) {
  if (m < 2) m = 2;
  if (m % 2 != 0) ++m;
  QuadratureNodes q;
  const double h = (b - a) / m;
  for (int i = 0; i <= m; ++i) {
    q.x.push_back(a + i * h);
    const double c = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    q.w.push_back(c * h / 3.0);
  }
  return q;
}

}  // namespace pdext
