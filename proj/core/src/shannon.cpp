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

#include "pdext/errors.hpp"
#include "pdext/mercer.hpp"
#include "pdext/parallel.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double xi) { return std::abs(xi) < 1e-8 ? 1.0 - xi * xi / 6.0 : std::sin(xi) / xi; }

QuadratureSpec with_radius(QuadratureSpec q, double radius) {
  if (q.radius == 0.0) q.radius = radius;
  q.validate();
  return q;
}

}  // namespace

complex shannon_kernel(double xi, ShannonPhase phase) {
  const double s = sinc(xi);
  switch (phase) {
    case ShannonPhase::analysis:
      return std::polar(s, -xi);
    case ShannonPhase::synthesis:
      return std::polar(s, xi);
    case ShannonPhase::centered:
      return {s, 0.0};
  }
  return {s, 0.0};
}

std::vector<complex> shannon_functions(const SpectralMeasure& mu, int n,
                                       const std::vector<double>& xs, ShannonPhase phase,
                                       const QuadratureSpec& q) {
  const SpectralMeasure nu = mu.pushforward_scaled(1.0 / (2.0 * kPi));
  const SpectralNodes nodes = discretize(nu, with_radius(q, std::abs(n) + 64.0));
  std::vector<complex> out(xs.size());
  std::vector<complex> kern(nodes.lambda.size());
  for (std::size_t j = 0; j < kern.size(); ++j) {
    kern[j] = nodes.mass[j] * shannon_kernel(kPi * (nodes.lambda[j] - n), phase);
  }
  parallel_for(xs.size(), [&](std::size_t i) {
    complex acc = 0.0;
    for (std::size_t j = 0; j < kern.size(); ++j) {
      acc += kern[j] * std::polar(1.0, 2.0 * kPi * nodes.lambda[j] * xs[i]);
    }
    out[i] = acc;
  });
  return out;
}

ShannonMembership ext_membership_shannon(const PdFunction& f, const SpectralMeasure& mu,
                                         const std::vector<double>& xs, int n_max,
                                         double tol, const QuadratureSpec& q) {
  if (n_max < 0) throw ArgumentError("ext_membership_shannon: N_max must be >= 0");
  if (xs.empty()) throw ArgumentError("ext_membership_shannon: empty grid");
  const double a = f.half_width();
  if (!std::isfinite(a)) throw DomainError("ext_membership_shannon: F needs a bounded domain");
  // G(t) = F(a t) on (-1, 1) has measure mu pushed by a; then l -> l / 2pi.
  const SpectralMeasure nu = mu.pushforward_scaled(a / (2.0 * kPi));
  const SpectralNodes nodes = discretize(nu, with_radius(q, n_max + 64.0));
  const Eigen::Index m = static_cast<Eigen::Index>(nodes.lambda.size());
  const Eigen::Index nx = static_cast<Eigen::Index>(xs.size());

  Eigen::VectorXcd target(nx);
  Eigen::MatrixXcd e(nx, m);
  for (Eigen::Index i = 0; i < nx; ++i) {
    target(i) = f(xs[i]);
    const double t = xs[i] / a;
    for (Eigen::Index j = 0; j < m; ++j) {
      e(i, j) = nodes.mass[j] * std::polar(1.0, 2.0 * kPi * nodes.lambda[j] * t);
    }
  }

  // s(l) = sum_{|n| <= N} sinc(pi (l - n)), grown one shell at a time.
  Eigen::VectorXcd s = Eigen::VectorXcd::Zero(m);
  ShannonMembership r{false, 0.0, 0, {}};
  for (int big_n = 0; big_n <= n_max; ++big_n) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double l = nodes.lambda[j];
      double add = sinc(kPi * (l - big_n));
      if (big_n > 0) add += sinc(kPi * (l + big_n));
      s(j) += add;
    }
    const double err = (e * s - target).cwiseAbs().maxCoeff();
    r.errors.push_back(err);
    r.sup_error = err;
    r.n_used = big_n;
    if (err <= tol) {
      r.pass = true;
      break;
    }
  }
  return r;
}

}  // namespace pdext
