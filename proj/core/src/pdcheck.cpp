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

#include "pdext/pdcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pdext/errors.hpp"
#include "pdext/linalg.hpp"

namespace pdext {

std::string to_string(GramVerdict v) { return v == GramVerdict::psd ? "psd" : "indefinite"; }

Eigen::MatrixXcd gram_matrix(const PdFunction& f, const std::vector<double>& points) {
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = points[i] - points[j];
      if (!f.domain().contains_closed(d)) {
        throw DomainError("gram_matrix: difference " + std::to_string(d) +
                          " outside the domain of F");
      }
      m(i, j) = f(d);
    }
  }
  return m;
}

Eigen::MatrixXcd gram_matrix(const Kernel& k, const std::vector<double>& points) {
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = k(points[i], points[j]);
  }
  return m;
}

GramReport gram_report(std::vector<double> points, Eigen::MatrixXcd m, double tol) {
  // Symmetrize away round-off before the Hermitian solver reads one triangle.
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::VectorXd ev = hermitian_eigenvalues(h);
  GramReport r;
  r.points = std::move(points);
  r.matrix = std::move(m);
  r.eigenvalues = ev;
  r.min_eigenvalue = ev.size() ? ev(0) : 0.0;
  r.max_eigenvalue = ev.size() ? ev(ev.size() - 1) : 0.0;
  r.verdict = r.min_eigenvalue >= -tol * std::max(1.0, r.max_eigenvalue)
                  ? GramVerdict::psd
                  : GramVerdict::indefinite;
  return r;
}

GramReport is_pd_grid(const PdFunction& f, const std::vector<double>& points, double tol) {
  return gram_report(points, gram_matrix(f, points), tol);
}

GramReport kernel_pd(const Kernel& k, const std::vector<double>& points, double tol) {
  return gram_report(points, gram_matrix(k, points), tol);
}

DominationResult domination(const PdFunction& k, const PdFunction& f,
                            const std::vector<double>& points, std::optional<double> a) {
  Eigen::MatrixXcd gk = gram_matrix(k, points);
  Eigen::MatrixXcd gf = gram_matrix(f, points);
  gk = 0.5 * (gk + gk.adjoint()).eval();
  gf = 0.5 * (gf + gf.adjoint()).eval();
  if (a) {
    const GramReport r = gram_report(points, (*a) * gf - gk);
    return {r.verdict == GramVerdict::psd, *a};
  }
  const HermitianEigen ef = hermitian_eigen(gf);
  const double lmax = ef.values.size() ? ef.values(ef.values.size() - 1) : 0.0;
  if (!(lmax > 0.0)) throw DegenerateError("domination: Gram(F) vanishes");
  const double cutoff = 1e-12 * lmax;
  std::vector<Eigen::Index> keep;
  std::vector<Eigen::Index> drop;
  for (Eigen::Index i = 0; i < ef.values.size(); ++i) {
    (ef.values(i) > cutoff ? keep : drop).push_back(i);
  }
  const Eigen::Index r = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXcd u(gf.rows(), r);
  Eigen::VectorXd inv_sqrt(r);
  for (Eigen::Index c = 0; c < r; ++c) {
    u.col(c) = ef.vectors.col(keep[c]);
    inv_sqrt(c) = 1.0 / std::sqrt(ef.values(keep[c]));
  }
  // Mass of Gram(K) on the numerical null space of Gram(F) cannot be dominated.
  const double gk_scale = std::max(1.0, gk.cwiseAbs().maxCoeff());
  for (Eigen::Index idx : drop) {
    const Eigen::VectorXcd v = ef.vectors.col(idx);
    const double q = (v.adjoint() * gk * v)(0, 0).real();
    if (q > 1e-10 * gk_scale) return {false, std::numeric_limits<double>::infinity()};
  }
  const Eigen::MatrixXcd w = u * inv_sqrt.asDiagonal();
  const Eigen::MatrixXcd pencil = w.adjoint() * gk * w;
  const Eigen::VectorXd ev = hermitian_eigenvalues(0.5 * (pencil + pencil.adjoint()));
  const double amin = ev.size() ? std::max(0.0, ev(ev.size() - 1)) : 0.0;
  return {true, amin};
}

PolyaReport polya_criterion(const std::vector<double>& samples, double spacing) {
  if (samples.size() < 4) throw DataError("polya_criterion: need at least 4 samples");
  if (!(spacing > 0.0)) throw ArgumentError("polya_criterion: spacing must be positive");
  PolyaReport rep{true, {}};
  const double f0 = samples.front();
  if (!(f0 > 0.0)) throw DataError("polya_criterion: f(0) must be positive");
  const double mono_tol = 1e-12 * f0;
  const double conv_tol = 1e-9 * spacing * spacing * f0;
  auto fail = [&rep](const std::string& what, std::size_t i) {
    std::ostringstream os;
    os << what << " at sample " << i;
    rep.failures.push_back(os.str());
    rep.pass = false;
  };
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] - samples[i - 1] > mono_tol) fail("increase", i);
  }
  if (std::abs(samples.back()) > 1e-9 * f0) fail("nonzero tail", samples.size() - 1);
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double d2 = samples[i + 1] - 2.0 * samples[i] + samples[i - 1];
    if (d2 < -conv_tol) fail("concavity", i);
  }
  return rep;
}

MonotoneReport completely_monotone(const std::vector<double>& samples, int max_order,
                                   double tol) {
  if (max_order < 1 || max_order > 6) throw ArgumentError("completely_monotone: order in 1..6");
  if (samples.size() < static_cast<std::size_t>(max_order) + 1) {
    throw DataError("completely_monotone: too few samples for the order");
  }
  double scale = 0.0;
  for (double v : samples) scale = std::max(scale, std::abs(v));
  const double thr = tol * std::max(1.0, scale);
  std::vector<double> diff = samples;
  for (int k = 1; k <= max_order; ++k) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (sign * diff[i] < -thr) return {false, k, static_cast<int>(i)};
    }
  }
  return {true, 0, -1};
}

}  // namespace pdext
