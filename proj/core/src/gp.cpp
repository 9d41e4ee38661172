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

#include "pdext/gp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pdext/errors.hpp"
#include "pdext/parallel.hpp"

namespace pdext {

CovKernel::CovKernel(Id id, double param, std::optional<PdFunction> f)
    : id_(id), param_(param), f_(std::move(f)) {}

CovKernel CovKernel::bm() { return CovKernel(Id::bm, 0.0, std::nullopt); }
CovKernel CovKernel::bridge() { return CovKernel(Id::bridge, 0.0, std::nullopt); }

CovKernel CovKernel::ou(double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("ou: alpha must be positive");
  return CovKernel(Id::ou, alpha, std::nullopt);
}

CovKernel CovKernel::fbm(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) throw ParameterError("fbm: H must lie in (0, 1)");
  return CovKernel(Id::fbm, hurst, std::nullopt);
}

CovKernel CovKernel::from_pd(const PdFunction& f) { return CovKernel(Id::from_pd, 0.0, f); }

CovKernel CovKernel::from_string(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const bool has_arg = colon != std::string::npos;
  auto arg = [&] {
    try {
      return std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw ArgumentError("bad kernel parameter in '" + spec + "'");
    }
  };
  if (head == "bm") return bm();
  if (head == "bridge") return bridge();
  if (head == "ou") return ou(has_arg ? arg() : 1.0);
  if (head == "fbm") {
    if (!has_arg) throw ArgumentError("fbm needs a Hurst index, e.g. fbm:0.7");
    return fbm(arg());
  }
  throw ArgumentError("unknown kernel '" + spec + "'");
}

double CovKernel::operator()(double s, double t) const {
  switch (id_) {
    case Id::bm:
      return std::min(s, t);
    case Id::bridge:
      return std::min(s, t) - s * t;
    case Id::ou:
      return std::exp(-0.5 * param_ * std::abs(s - t)) / param_;
    case Id::fbm: {
      const double e = 2.0 * param_;
      return 0.5 * (std::pow(std::abs(s), e) + std::pow(std::abs(t), e) -
                    std::pow(std::abs(s - t), e));
    }
    case Id::from_pd:
      return (*f_)(s - t).real();
  }
  return 0.0;
}

double CovKernel::mean(double t) const { return id_ == Id::bridge ? t : 0.0; }

std::string CovKernel::name() const {
  switch (id_) {
    case Id::bm:
      return "bm";
    case Id::bridge:
      return "bridge";
    case Id::ou:
      return "ou:" + std::to_string(param_);
    case Id::fbm:
      return "fbm:" + std::to_string(param_);
    case Id::from_pd:
      return "from_pd:" + f_->description();
  }
  return "";
}

Kernel CovKernel::as_kernel() const {
  const CovKernel self = *this;
  Interval dom = Interval::real_line();
  if (id_ == Id::bm) dom = Interval(0.0, INFINITY);
  if (id_ == Id::bridge) dom = Interval(0.0, 1.0);
  return Kernel(dom, dom, [self](double s, double t) { return complex(self(s, t), 0.0); }, name());
}

Eigen::MatrixXd cov_matrix(const CovKernel& k, const std::vector<double>& times) {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw ArgumentError("cov_matrix: times must increase strictly");
  }
  if (!times.empty() && (k.id() == CovKernel::Id::bm || k.id() == CovKernel::Id::ou) &&
      times.front() < 0.0) {
    throw DomainError("cov_matrix: times must be nonnegative");
  }
  if (!times.empty() && k.id() == CovKernel::Id::bridge &&
      (times.front() < 0.0 || times.back() > 1.0)) {
    throw DomainError("cov_matrix: bridge times must lie in [0, 1]");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(times.size());
  Eigen::MatrixXd c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) c(i, j) = c(j, i) = k(times[i], times[j]);
  }
  return c;
}

Eigen::MatrixXd jittered_cholesky(const Eigen::MatrixXd& c) {
  const Eigen::Index n = c.rows();
  const double scale = n > 0 ? c.trace() / n : 0.0;
  for (double eps : {0.0, 1e-12, 1e-10, 1e-8}) {
    Eigen::MatrixXd m = c;
    m.diagonal().array() += eps * scale;
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() == Eigen::Success) return llt.matrixL();
  }
  throw NumericError("Cholesky failed after maximal jitter");
}

PathEnsemble sample_paths(const CovKernel& k, const std::vector<double>& times, int m,
                          std::uint64_t seed) {
  if (m < 1) throw ArgumentError("sample_paths: m must be positive");
  const Eigen::MatrixXd l = jittered_cholesky(cov_matrix(k, times));
  const Eigen::Index n = static_cast<Eigen::Index>(times.size());
  PathEnsemble e{times, Eigen::MatrixXd(m, n), seed, k.name(), {}};
  Eigen::RowVectorXd mean(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    mean(j) = k.mean(times[j]);
    e.mean.push_back(mean(j));
  }
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(n);
    for (Eigen::Index j = 0; j < n; ++j) z(j) = normal(gen);
    e.paths.row(static_cast<Eigen::Index>(p)) = (l * z).transpose() + mean;
  });
  return e;
}

Eigen::MatrixXd empirical_covariance(const PathEnsemble& e) {
  Eigen::MatrixXd centered = e.paths;
  for (Eigen::Index j = 0; j < centered.cols(); ++j) {
    centered.col(j).array() -= e.mean[static_cast<std::size_t>(j)];
  }
  return (centered.transpose() * centered) / static_cast<double>(e.paths.rows());
}

CovarianceReport compare_covariance(const Eigen::MatrixXd& empirical, const Eigen::MatrixXd& model,
                                    int m) {
  if (empirical.rows() != model.rows() || empirical.cols() != model.cols()) {
    throw ArgumentError("compare_covariance: shape mismatch");
  }
  const double err = (empirical - model).cwiseAbs().maxCoeff();
  const double tol = 5.0 / std::sqrt(static_cast<double>(m));
  return {err, tol, err <= tol};
}

std::vector<double> ou_bm_times(const std::vector<double>& xs, double alpha) {
  std::vector<double> t(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) t[i] = std::exp(alpha * xs[i]);
  return t;
}

PathEnsemble ou_from_bm(const PathEnsemble& bm, const std::vector<double>& xs,
                        std::optional<double> alpha) {
  const double a = alpha.value_or(2.0);
  if (!(a > 0.0)) throw ParameterError("ou_from_bm: alpha must be positive");
  const std::vector<double> want = ou_bm_times(xs, a);
  if (want.size() != bm.times.size()) throw ArgumentError("ou_from_bm: time grids differ");
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (std::abs(want[i] - bm.times[i]) > 1e-12 * want[i]) {
      throw ArgumentError("ou_from_bm: ensemble is not sampled at exp(alpha x)");
    }
  }
  const double norm = alpha ? 1.0 / std::sqrt(a) : 1.0;
  PathEnsemble out{xs, bm.paths, bm.seed, alpha ? "ou:" + std::to_string(a) : "ou-transform",
                   std::vector<double>(xs.size(), 0.0)};
  for (std::size_t j = 0; j < xs.size(); ++j) {
    out.paths.col(static_cast<Eigen::Index>(j)) *= norm * std::exp(-0.5 * a * xs[j]);
  }
  return out;
}

ItoReport ito_isometry_check(const std::vector<double>& f_values, const PathEnsemble& bm) {
  const std::size_t n = bm.times.size();
  if (n < 2 || f_values.size() != n) {
    throw ArgumentError("ito_isometry_check: f must be sampled at every ensemble time");
  }
  double rhs = 0.0;
  for (std::size_t i = 1; i < n; ++i) rhs += f_values[i] * f_values[i] * (bm.times[i] - bm.times[i - 1]);
  const Eigen::Index m = bm.paths.rows();
  Eigen::VectorXd s2(m);
  for (Eigen::Index p = 0; p < m; ++p) {
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      const auto c = static_cast<Eigen::Index>(i);
      s += f_values[i] * (bm.paths(p, c) - bm.paths(p, c - 1));
    }
    s2(p) = s * s;
  }
  const double lhs = s2.mean();
  const double var = m > 1 ? (s2.array() - lhs).square().sum() / (m - 1) : 0.0;
  const double se = std::sqrt(var / m);
  const double z = se > 0.0 ? (lhs - rhs) / se : (lhs == rhs ? 0.0 : INFINITY);
  return {lhs, rhs, z};
}

PowerSeriesReport random_power_series_charfn(double a, int m, const std::vector<double>& lambdas,
                                             std::uint64_t seed) {
  if (!(a > 0.0 && a < 1.0)) throw ParameterError("random power series: a must lie in (0, 1)");
  if (m < 1) throw ArgumentError("random power series: m must be positive");
  int terms = 1;
  while (std::pow(a, terms) >= 1e-12) ++terms;
  if (terms > 64) throw ParameterError("random power series: a too close to 1");
  std::vector<double> xs(static_cast<std::size_t>(m));
  parallel_for(xs.size(), [&](std::size_t p) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
    std::mt19937_64 gen(seq);
    const std::uint64_t bits = gen();
    double x = 0.0;
    double ak = a;
    for (int k = 0; k < terms; ++k, ak *= a) x += ((bits >> k) & 1U) ? ak : -ak;
    xs[p] = x;
  });
  PowerSeriesReport r{terms, lambdas, std::vector<complex>(lambdas.size()),
                      std::vector<double>(lambdas.size()), 0.0};
  parallel_for(lambdas.size(), [&](std::size_t i) {
    const double l = lambdas[i];
    double re = 0.0;
    double im = 0.0;
    for (double x : xs) {
      re += std::cos(l * x);
      im += std::sin(l * x);
    }
    r.empirical[i] = complex(re, im) / static_cast<double>(m);
    double prod = 1.0;
    double ak = a;
    for (int k = 0; k < terms; ++k, ak *= a) prod *= std::cos(ak * l);
    r.model[i] = prod;
  });
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    r.sup_error = std::max(r.sup_error, std::abs(r.empirical[i] - r.model[i]));
  }
  return r;
}

}  // namespace pdext
