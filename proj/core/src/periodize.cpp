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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdext/bochner.hpp"
#include "pdext/errors.hpp"
#include "pdext/parallel.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;

// Catalog entries with an integrable transform pair: w_n = 2 pi rho(2 pi n).
bool catalog_integrable(const PdFunction& f) {
  const auto& e = f.catalog_entry();
  if (!e) return false;
  if (e->id == CatalogId::F6) return false;
  if (e->id == CatalogId::F7) return e->p > 1.0;
  return true;
}

bool compactly_supported(const PdFunction& f) {
  if (!f.domain().bounded()) return false;
  const double a = f.half_width();
  const double scale = std::max(1.0, std::abs(f(0.0)));
  return std::abs(f(-a)) <= 1e-12 * scale && std::abs(f(a)) <= 1e-12 * scale;
}

// int_{lo}^{hi} F(x) exp(-i 2 pi n x) dx, real part.
double lattice_coefficient(const PdFunction& f, double lo, double hi, int n) {
  const double width = std::min(0.125, 1.0 / (2.0 * std::abs(n) + 2.0));
  std::vector<double> breaks = {lo};
  if (lo < 0.0 && hi > 0.0) breaks.push_back(0.0);
  breaks.push_back(hi);
  const QuadratureNodes g = gauss_legendre_breaks(breaks, width, 16);
  complex acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc += g.w[i] * f(g.x[i]) * std::polar(1.0, -2.0 * kPi * n * g.x[i]);
  }
  return acc.real();
}

}  // namespace

CircleWeights periodize(const PdFunction& f, Window window, int n_max) {
  if (n_max < 0) throw ArgumentError("periodize: N must be >= 0");
  CircleWeights out{n_max, std::vector<double>(2 * n_max + 1, 0.0),
                    "F_per(x) = sum_n w_n exp(i 2 pi n x)", true, 0.0, 0.0};
  std::function<double(int)> coeff;
  if (window == Window::unit_box) {
    if (!f.global() && !f.domain().contains(Interval(-0.5, 0.5))) {
      throw DomainError("periodize: F is not defined on [-1/2, 1/2]");
    }
    coeff = [&f](int n) { return lattice_coefficient(f, -0.5, 0.5, n); };
  } else if (catalog_integrable(f)) {
    const auto& e = *f.catalog_entry();
    const SpectralMeasure mu = SpectralMeasure::catalog(e.id, e.p);
    coeff = [mu](int n) { return 2.0 * kPi * mu.density_at(2.0 * kPi * n); };
  } else if (compactly_supported(f)) {
    const double a = f.half_width();
    coeff = [&f, a](int n) { return lattice_coefficient(f, -a, a, n); };
  } else {
    throw DomainError("periodize: F is not integrable on the line");
  }
  parallel_for(out.weights.size(), [&](std::size_t i) {
    out.weights[i] = coeff(static_cast<int>(i) - n_max);
  });
  out.min_weight = *std::min_element(out.weights.begin(), out.weights.end());
  out.positive = out.min_weight >= 0.0;
  for (double w : out.weights) out.partial_sum += w;
  return out;
}

double lattice_partial_sum(const PdFunction& f, Window window, long n_max) {
  if (n_max < 0) throw ArgumentError("lattice_partial_sum: N must be >= 0");
  if (window == Window::none) {
    if (!catalog_integrable(f)) {
      if (n_max > 100000) throw ArgumentError("lattice_partial_sum: N too large for quadrature");
      return periodize(f, window, static_cast<int>(n_max)).partial_sum;
    }
    const auto& e = *f.catalog_entry();
    const SpectralMeasure mu = SpectralMeasure::catalog(e.id, e.p);
    // Small terms first for a stable sum.
    double acc = 0.0;
    for (long n = n_max; n >= 1; --n) acc += 2.0 * (2.0 * kPi * mu.density_at(2.0 * kPi * n));
    return acc + 2.0 * kPi * mu.density_at(0.0);
  }
  if (!f.global() && !f.domain().contains(Interval(-0.5, 0.5))) {
    throw DomainError("lattice_partial_sum: F is not defined on [-1/2, 1/2]");
  }
  // sum_{|n| <= N} W^(n) = int F(x) D_N(x) dx with the Dirichlet kernel.
  const double m = 2.0 * static_cast<double>(n_max) + 1.0;
  auto dirichlet = [m](double x) {
    const double s = std::sin(kPi * x);
    if (std::abs(s) < 1e-12) return m;
    return std::sin(m * kPi * x) / s;
  };
  const long panels_per_side = std::max(8L, static_cast<long>(std::ceil(m)));
  const std::size_t chunks = 64;
  std::vector<double> partial(chunks, 0.0);
  parallel_for(chunks, [&](std::size_t c) {
    const QuadratureNodes ref = gauss_legendre(16, 0.0, 1.0);
    const double h = 0.5 / static_cast<double>(panels_per_side);
    const long begin = static_cast<long>(c) * panels_per_side / static_cast<long>(chunks);
    const long end = static_cast<long>(c + 1) * panels_per_side / static_cast<long>(chunks);
    double acc = 0.0;
    for (long p = begin; p < end; ++p) {
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const double x = (static_cast<double>(p) + ref.x[i]) * h;
        const double d = dirichlet(x);
        acc += ref.w[i] * h * d * (f(x).real() + f(-x).real());
      }
    }
    partial[c] = acc;
  });
  double acc = 0.0;
  for (double v : partial) acc += v;
  return acc;
}

std::vector<complex> circle_fourier_coefficients(const std::function<complex(double)>& f,
                                                 int n_max,
                                                 const std::vector<double>& breaks) {
  if (n_max < 0) throw ArgumentError("circle_fourier_coefficients: N must be >= 0");
  std::vector<double> b = {-kPi};
  for (double x : breaks) {
    if (x > -kPi && x < kPi) b.push_back(x);
  }
  b.push_back(kPi);
  std::sort(b.begin(), b.end());
  const double width = std::min(0.25, kPi / (n_max + 1.0));
  const QuadratureNodes g = gauss_legendre_breaks(b, width, 16);
  std::vector<complex> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) values[i] = f(g.x[i]);
  std::vector<complex> out(2 * n_max + 1);
  parallel_for(out.size(), [&](std::size_t k) {
    const int n = static_cast<int>(k) - n_max;
    complex acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      acc += g.w[i] * values[i] * std::polar(1.0, -n * g.x[i]);
    }
    out[k] = acc / (2.0 * kPi);
  });
  return out;
}

}  // namespace pdext
