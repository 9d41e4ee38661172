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
#include <limits>

#include "pdext/bochner.hpp"
#include "pdext/errors.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

namespace {

constexpr double kProbeStart = 32.0;
constexpr int kProbeLevels = 4;
constexpr double kGrowthRatio = 1.5;

struct Truncated {
  double signed_value = 0.0;
  double absolute = 0.0;
};

// int_{|l| <= r} l^n rho(l) dl for one component.
Truncated truncated_moment(const DensityComponent& c, int n, double r, int per_unit) {
  Truncated t;
  double lo = std::max(c.lo, -r);
  const double hi = std::min(c.hi, r);
  if (!(hi > lo)) return t;
  auto add = [&](double l, double m) {
    const double v = std::pow(l, n) * m;
    t.signed_value += v;
    t.absolute += std::abs(v);
  };
  if (c.head) {
    for (std::size_t i = 0; i < c.head->size(); ++i) {
      if (std::abs(c.head->x[i]) <= r) add(c.head->x[i], c.head->w[i]);
    }
    lo = std::max(lo, c.head_end);
  }
  std::vector<double> breaks = {lo};
  for (double k : c.kinks) {
    if (k > lo && k < hi) breaks.push_back(k);
  }
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  const QuadratureNodes g = gauss_legendre_breaks(breaks, 16.0 / per_unit, 16);
  for (std::size_t i = 0; i < g.size(); ++i) add(g.x[i], g.w[i] * c.rho(g.x[i]));
  return t;
}

struct Probe {
  std::vector<double> radius;
  std::vector<double> absolute;
  std::vector<double> signed_value;
};

Probe probe_moment(const SpectralMeasure& mu, int n, const QuadratureSpec& q) {
  Probe p;
  double atoms_signed = 0.0;
  double atoms_abs = 0.0;
  for (const Atom& a : mu.atoms()) {
    const double v = std::pow(a.location, n) * a.weight;
    atoms_signed += v;
    atoms_abs += std::abs(v);
  }
  const double start = q.radius > 0.0 ? q.radius : kProbeStart;
  for (int level = 0; level < kProbeLevels; ++level) {
    const double r = start * std::pow(2.0, level);
    double s = atoms_signed;
    double a = atoms_abs;
    for (const DensityComponent& c : mu.densities()) {
      const Truncated t = truncated_moment(c, n, r, q.nodes_per_unit);
      s += t.signed_value;
      a += t.absolute;
    }
    p.radius.push_back(r);
    p.absolute.push_back(a);
    p.signed_value.push_back(s);
  }
  return p;
}

double last_ratio(const Probe& p) {
  const std::size_t k = p.absolute.size();
  if (p.absolute[k - 2] == 0.0) return p.absolute[k - 1] == 0.0 ? 1.0 : kGrowthRatio * 2;
  return p.absolute[k - 1] / p.absolute[k - 2];
}

}  // namespace

MomentResult moment(const SpectralMeasure& mu, int n, const QuadratureSpec& q) {
  if (n < 0) throw ArgumentError("moment order must be >= 0");
  q.validate();
  const Probe p = probe_moment(mu, n, q);
  MomentResult res;
  res.probe_radius = p.radius;
  res.probe_values = p.absolute;
  const std::size_t k = p.absolute.size();
  const double increment = std::abs(p.absolute[k - 1] - p.absolute[k - 2]);
  if (last_ratio(p) > kGrowthRatio) {
    res.divergent = true;
  } else if (increment <= q.tol * std::max(1.0, p.absolute[k - 1])) {
    res.value = p.signed_value[k - 1];
  }
  return res;
}

MomentSequence MomentSequence::from_values(const std::vector<double>& values,
                                           std::string measure_id) {
  MomentSequence s;
  s.id_ = std::move(measure_id);
  for (double v : values) {
    s.log_abs_.push_back(v == 0.0 ? -std::numeric_limits<double>::infinity()
                                  : std::log(std::abs(v)));
    s.sign_.push_back((v > 0.0) - (v < 0.0));
  }
  return s;
}

MomentSequence MomentSequence::from_log_values(std::vector<double> log_values,
                                               std::string measure_id) {
  MomentSequence s;
  s.id_ = std::move(measure_id);
  s.sign_.assign(log_values.size(), 1);
  s.log_abs_ = std::move(log_values);
  return s;
}

double MomentSequence::value(std::size_t n) const {
  return sign_.at(n) * std::exp(log_abs_.at(n));
}

CarlemanReport carleman_diagnostic(const MomentSequence& moments) {
  if (moments.size() < 11) throw DataError("carleman: need even moments up to 2K with K >= 5");
  const std::size_t k_max = (moments.size() - 1) / 2;
  CarlemanReport rep{0.0, {}, CarlemanVerdict::determinate_evidence};
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (!moments.positive(2 * k)) throw DataError("carleman: even moment is not positive");
    const double term = std::exp(-moments.log_value(2 * k) / (2.0 * k));
    rep.terms.push_back(term);
    rep.divergent_partial_sum += term;
  }
  // Geometric decay over the last five ratios means the series converges.
  bool geometric = rep.terms.size() >= 6;
  for (std::size_t i = rep.terms.size() - 5; geometric && i < rep.terms.size(); ++i) {
    geometric = rep.terms[i] < 0.9 * rep.terms[i - 1];
  }
  if (geometric) rep.verdict = CarlemanVerdict::inconclusive;
  return rep;
}

std::string to_string(DeficiencyIndices d) {
  switch (d) {
    case DeficiencyIndices::zero_zero:
      return "(0,0)";
    case DeficiencyIndices::one_one:
      return "(1,1)";
    case DeficiencyIndices::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IndexReport second_moment_index_diagnostic(const SpectralMeasure& mu,
                                           const QuadratureSpec& q) {
  q.validate();
  const Probe p = probe_moment(mu, 2, q);
  IndexReport rep{DeficiencyIndices::inconclusive, p.radius, p.absolute, last_ratio(p)};
  const std::size_t k = p.absolute.size();
  const double increment = std::abs(p.absolute[k - 1] - p.absolute[k - 2]);
  if (rep.last_ratio > kGrowthRatio) {
    rep.indices = DeficiencyIndices::one_one;
  } else if (increment <= 1e-6 * std::max(1.0, p.absolute[k - 1])) {
    rep.indices = DeficiencyIndices::zero_zero;
  }
  return rep;
}

}  // namespace pdext
