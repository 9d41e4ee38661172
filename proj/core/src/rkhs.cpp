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

#include "pdext/rkhs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pdext/errors.hpp"
#include "pdext/linalg.hpp"
#include "pdext/mercer.hpp"
#include "pdext/parallel.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;

// int_{-1}^{1} (1 - t^2)^k exp(-i w t) dt, real and even in w.
double poly_bump_transform(int k, double w) {
  const double b0 = std::sqrt(kPi) * std::tgamma(k + 1.0) / std::tgamma(k + 1.5);
  const double aw = std::abs(w);
  if (aw < 1e-2) {
    const double w2 = w * w;
    return b0 * (1.0 - w2 / (2.0 * (2 * k + 3)) + 3.0 * w2 * w2 / (24.0 * (2 * k + 3) * (2 * k + 5)));
  }
  const double nu = k + 0.5;
  return std::sqrt(kPi) * std::tgamma(k + 1.0) * std::pow(2.0 / aw, nu) *
         std::cyl_bessel_j(nu, aw);
}

std::vector<double> breaks_within(std::vector<double> pts, double lo, double hi) {
  std::vector<double> out{lo, hi};
  for (double p : pts) {
    if (p > lo && p < hi) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TestFunction::TestFunction(double lo, double hi, Eval f, Eval transform, std::string name,
                           std::vector<double> breaks)
    : lo_(lo), hi_(hi), f_(std::move(f)), transform_(std::move(transform)),
      name_(std::move(name)), breaks_(std::move(breaks)) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArgumentError("TestFunction: support must be a bounded interval");
  }
}

TestFunction TestFunction::poly_bump(double center, double radius, int k) {
  if (!(radius > 0.0) || k < 2) throw ArgumentError("poly_bump: need radius > 0 and k >= 2");
  auto f = [=](double x) {
    const double t = (x - center) / radius;
    return complex(std::abs(t) < 1.0 ? std::pow(1.0 - t * t, k) : 0.0, 0.0);
  };
  auto ft = [=](double l) {
    return radius * poly_bump_transform(k, l * radius) * std::polar(1.0, -l * center);
  };
  return TestFunction(center - radius, center + radius, f, ft,
                      "poly_bump(" + std::to_string(k) + ")", {});
}

TestFunction TestFunction::gaussian_bump(double center, double width) {
  if (!(width > 0.0)) throw ArgumentError("gaussian_bump: width must be positive");
  const double cut = 8.0 * width;
  auto f = [=](double x) {
    const double t = (x - center) / width;
    return complex(std::abs(x - center) <= cut ? std::exp(-0.5 * t * t) : 0.0, 0.0);
  };
  auto ft = [=](double l) {
    const double lw = l * width;
    return width * std::sqrt(2.0 * kPi) * std::exp(-0.5 * lw * lw) * std::polar(1.0, -l * center);
  };
  return TestFunction(center - cut, center + cut, f, ft, "gaussian_bump", {center});
}

TestFunction TestFunction::sampled(std::vector<double> nodes, std::vector<complex> values) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw ArgumentError("TestFunction::sampled: need matching nodes and values");
  }
  if (!std::is_sorted(nodes.begin(), nodes.end())) {
    throw ArgumentError("TestFunction::sampled: nodes must increase");
  }
  const double lo = nodes.front();
  const double hi = nodes.back();
  std::vector<double> brk = nodes;
  auto f = [nodes = std::move(nodes), values = std::move(values)](double x) -> complex {
    if (x < nodes.front() || x > nodes.back()) return 0.0;
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    if (it == nodes.end()) return values.back();
    const std::size_t j = static_cast<std::size_t>(it - nodes.begin());
    const double t = (x - nodes[j - 1]) / (nodes[j] - nodes[j - 1]);
    return (1.0 - t) * values[j - 1] + t * values[j];
  };
  return TestFunction(lo, hi, f, nullptr, "sampled", std::move(brk));
}

TestFunction TestFunction::from_callable(double lo, double hi, Eval f, Eval transform,
                                         std::string name) {
  return TestFunction(lo, hi, std::move(f), std::move(transform), std::move(name), {});
}

complex TestFunction::operator()(double x) const {
  if (x < lo_ || x > hi_) return 0.0;
  return f_(x);
}

complex TestFunction::transform(double lambda) const {
  if (transform_) return transform_(lambda);
  const double width = std::min((hi_ - lo_) / 32.0, 1.0 / (std::abs(lambda) + 1.0));
  const QuadratureNodes g = gauss_legendre_breaks(breaks_within(breaks_, lo_, hi_), width);
  return g.integrate([&](double x) { return f_(x) * std::polar(1.0, -lambda * x); });
}

bool TestFunction::inside(const Interval& omega) const {
  return omega.lo() < lo_ && hi_ < omega.hi();
}

HFVector HFVector::convolved(PdFunction f, TestFunction phi) {
  HFVector v;
  v.f_ = std::move(f);
  v.phi_ = std::move(phi);
  return v;
}

HFVector HFVector::sampled(std::vector<double> nodes, std::vector<complex> values) {
  if (nodes.size() != values.size()) throw ArgumentError("HFVector: size mismatch");
  HFVector v;
  v.nodes_ = std::move(nodes);
  v.values_ = std::move(values);
  return v;
}

complex HFVector::operator()(double x) const {
  if (phi_) return convolve_test(*f_, *phi_, x);
  auto it = std::find(nodes_.begin(), nodes_.end(), x);
  if (it == nodes_.end()) throw DomainError("HFVector: point is not a sample node");
  return values_[static_cast<std::size_t>(it - nodes_.begin())];
}

complex convolve_test(const PdFunction& f, const TestFunction& phi, double x, int panels,
                      int order) {
  std::vector<double> pts = phi.breaks();
  pts.push_back(x);
  const double width = (phi.hi() - phi.lo()) / panels;
  const QuadratureNodes g = gauss_legendre_breaks(breaks_within(pts, phi.lo(), phi.hi()), width, order);
  return g.integrate([&](double y) { return phi(y) * f(x - y); });
}

complex hf_inner(const PdFunction& f, const TestFunction& phi, const TestFunction& psi,
                 int panels, int order) {
  const double width = (phi.hi() - phi.lo()) / panels;
  const QuadratureNodes g =
      gauss_legendre_breaks(breaks_within(phi.breaks(), phi.lo(), phi.hi()), width, order);
  std::vector<complex> terms(g.size());
  parallel_for(g.size(), [&](std::size_t i) {
    terms[i] = g.w[i] * std::conj(phi(g.x[i])) * convolve_test(f, psi, g.x[i], panels, order);
  });
  complex acc = 0.0;
  for (const complex& t : terms) acc += t;
  return acc;
}

double hf_norm2(const PdFunction& f, const TestFunction& phi) {
  return hf_inner(f, phi, phi).real();
}

IsometryReport isometry_check(const PdFunction& f, const SpectralMeasure& mu,
                              const TestFunction& phi, const QuadratureSpec& q) {
  const double lhs = hf_norm2(f, phi);
  const SpectralNodes nodes = discretize(mu, q);
  double rhs = 0.0;
  for (std::size_t j = 0; j < nodes.lambda.size(); ++j) {
    rhs += nodes.mass[j] * std::norm(phi.transform(nodes.lambda[j]));
  }
  return {lhs, rhs, std::abs(lhs - rhs)};
}

HFVector adjoint_apply(const SpectralMeasure& mu, const std::function<complex(double)>& f,
                       const std::vector<double>& xs, const QuadratureSpec& q) {
  const SpectralNodes nodes = discretize(mu, q);
  std::vector<complex> fv(nodes.lambda.size());
  double r_max = 0.0;
  for (std::size_t j = 0; j < fv.size(); ++j) {
    fv[j] = f(nodes.lambda[j]);
    r_max = std::max(r_max, std::abs(nodes.lambda[j]));
  }
  // Truncated int |f|^2 dmu at R/8, R/4, R/2, R.
  std::array<double, 4> s{};
  for (std::size_t j = 0; j < fv.size(); ++j) {
    const double v = nodes.mass[j] * std::norm(fv[j]);
    if (!std::isfinite(v)) throw DomainError("adjoint_apply: f is not finite on the support");
    for (int k = 0; k < 4; ++k) {
      if (std::abs(nodes.lambda[j]) <= r_max / std::pow(2.0, 3 - k)) s[k] += v;
    }
  }
  const double inc_prev = s[2] - s[1];
  const double inc_last = s[3] - s[2];
  if (inc_last > 1e-6 * std::max(1.0, s[3]) && inc_last > 0.75 * inc_prev) {
    throw DomainError("adjoint_apply: int |f|^2 dmu does not converge");
  }
  std::vector<complex> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    complex acc = 0.0;
    for (std::size_t j = 0; j < fv.size(); ++j) {
      acc += nodes.mass[j] * fv[j] * std::polar(1.0, nodes.lambda[j] * xs[i]);
    }
    out[i] = acc;
  });
  return HFVector::sampled(xs, std::move(out));
}

std::string to_string(MembershipVerdict v) {
  return v == MembershipVerdict::member_evidence ? "member-evidence" : "diverging";
}

MembershipReport membership_test(const PdFunction& f, double a,
                                 const std::function<complex(double)>& xi,
                                 const MembershipSchedule& schedule) {
  if (!(a > 0.0)) throw ArgumentError("membership_test: a must be positive");
  if (schedule.base < 4 || schedule.levels < 2) {
    throw ConfigurationError("membership_test: need base >= 4 and at least two levels");
  }
  MembershipReport r{MembershipVerdict::member_evidence, 0.0, 0.0, 0.0, {}, {}};
  double cutoff = schedule.cutoff;
  for (int level = 0; level < schedule.levels; ++level) {
    const int n = schedule.base << level;
    const GridSpec grid = GridSpec::midpoint(Interval(0.0, a), n);
    const Eigen::MatrixXcd m = discretize(f, grid);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::sqrt(grid.weights()[i]) * xi(grid.nodes()[i]);
    const HermitianEigen e = hermitian_eigen(m);
    const double top = e.values.cwiseAbs().maxCoeff();
    if (!(top > 0.0)) throw DegenerateError("membership_test: Gram matrix vanishes");
    const Eigen::VectorXcd c = e.vectors.adjoint() * v;
    double quotient = 0.0;
    for (int k = 0; k < n; ++k) {
      if (e.values(k) > cutoff * top) quotient += std::norm(c(k)) / e.values(k);
    }
    r.sizes.push_back(n);
    r.quotients.push_back(quotient);
    cutoff *= schedule.cutoff_decay;
  }
  const std::vector<double>& qs = r.quotients;
  const std::size_t k = qs.size();
  r.norm2 = qs.back();
  const double ratio = qs[k - 1] / std::max(qs[k - 2], 1e-300);
  const double d_last = qs[k - 1] - qs[k - 2];
  const double d_prev = k >= 3 ? qs[k - 2] - qs[k - 3] : d_last;
  const double scale = std::max(std::abs(r.norm2), 1e-300);
  if (std::abs(d_last) <= 1e-12 * scale) {
    r.increment_ratio = 0.0;
    r.extrapolated = r.norm2;
  } else {
    r.increment_ratio = d_prev != 0.0 ? d_last / d_prev : INFINITY;
    const double q = r.increment_ratio;
    r.extrapolated = q >= 0.0 && q < 1.0 ? r.norm2 + d_last * q / (1.0 - q) : INFINITY;
  }
  const bool stable = std::abs(r.extrapolated - r.norm2) <= schedule.stable_tol * scale;
  r.verdict = ratio > schedule.growth || !stable ? MembershipVerdict::diverging
                                                 : MembershipVerdict::member_evidence;
  return r;
}

DeficiencyIntegral deficiency_integral(double a, const SpectralMeasure& mu,
                                       const QuadratureSpec& q) {
  if (!(a > 0.0)) throw ArgumentError("deficiency_integral: a must be positive");
  const SpectralNodes nodes = discretize(mu, q);
  const double ea = std::exp(a);
  double value = 0.0;
  double r_max = 0.0;
  for (std::size_t j = 0; j < nodes.lambda.size(); ++j) {
    const double l = nodes.lambda[j];
    value += nodes.mass[j] * (ea * ea + 1.0 - 2.0 * ea * std::cos(l * a)) / (1.0 + l * l);
    r_max = std::max(r_max, std::abs(l));
  }
  // The integrand is bounded by (e^a + 1)^2 / (1 + l^2), so a finite measure
  // always gives a finite value.
  double tail_mass = nodes.tail_bound;
  for (const TailPiece& t : nodes.tails) tail_mass += 4.0 * std::abs(t.amplitude) / t.radius;
  const double bound = (ea + 1.0) * (ea + 1.0) / (1.0 + r_max * r_max) * tail_mass;
  return {value, false, std::isfinite(bound) ? bound : 0.0};
}

DeficiencyComparison compare_deficiency(double a, const SpectralMeasure& mu,
                                        const QuadratureSpec& q) {
  DeficiencyComparison c{deficiency_integral(a, mu, q), second_moment_index_diagnostic(mu, q),
                         false};
  const bool finite = c.integral.value.has_value();
  c.agree = finite == (c.second_moment.indices == DeficiencyIndices::one_one);
  return c;
}

std::string to_string(GreensCase c) { return c == GreensCase::f2 ? "F2" : "F3"; }

GreensCase greens_case_from_string(const std::string& s) {
  if (s == "F2" || s == "f2") return GreensCase::f2;
  if (s == "F3" || s == "f3") return GreensCase::f3;
  throw ArgumentError("unknown Green's case: " + s);
}

double greens_residual(GreensCase which, const TestFunction& phi, int n) {
  const double a = which == GreensCase::f2 ? 0.5 : 1.0;
  if (n < 8) throw ArgumentError("greens_residual: need n >= 8");
  if (!phi.inside(Interval(0.0, a))) {
    throw ArgumentError("greens_residual: support of phi must lie strictly inside Omega");
  }
  const PdFunction f = PdFunction::catalog(which == GreensCase::f2 ? CatalogId::F2 : CatalogId::F3);
  const double h = a / n;
  std::vector<double> u(static_cast<std::size_t>(n) + 1);
  parallel_for(u.size(), [&](std::size_t i) {
    u[i] = convolve_test(f, phi, static_cast<double>(i) * h).real();
  });
  double worst = 0.0;
  for (int i = 1; i < n; ++i) {
    const double x = i * h;
    const double d2 = (u[i - 1] - 2.0 * u[i] + u[i + 1]) / (h * h);
    const double p = phi(x).real();
    const double res = which == GreensCase::f2 ? p + 0.5 * d2 : p - 0.5 * (u[i] - d2);
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

BoundaryReport boundary_reproducing(GreensCase which, double x,
                                    const std::function<double(double)>& g,
                                    const std::function<double(double)>& dg) {
  const double a = which == GreensCase::f2 ? 0.5 : 1.0;
  if (!(x > 0.0 && x < a)) throw ArgumentError("boundary_reproducing: x must lie in Omega");
  const QuadratureNodes nodes = gauss_legendre_breaks({0.0, x, a}, a / 32.0, 20);
  double lhs = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = nodes.x[i];
    const double sgn = y < x ? 1.0 : -1.0;
    if (which == GreensCase::f2) {
      lhs += nodes.w[i] * 0.5 * sgn * dg(y);
    } else {
      const double fx = std::exp(-std::abs(x - y));
      lhs += nodes.w[i] * 0.5 * (sgn * fx * dg(y) + fx * g(y));
    }
  }
  const double rhs = which == GreensCase::f2
                         ? g(x) - 0.5 * (g(0.0) + g(0.5))
                         : g(x) - 0.5 * (std::exp(-x) * g(0.0) + std::exp(-(1.0 - x)) * g(1.0));
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace pdext
