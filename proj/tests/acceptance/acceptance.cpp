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

// Acceptance runner: one line per criterion, "criterion N: PASS|FAIL details".

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pdext/pdext.hpp"

namespace {

using namespace pdext;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    detail << (ok ? "" : "[x] ") << what << "; ";
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const std::vector<double>& w) {
  double uv = 0.0, uu = 0.0, vv = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double wi = w[static_cast<std::size_t>(i)];
    uv += wi * u(i) * v(i);
    uu += wi * u(i) * u(i);
    vv += wi * v(i) * v(i);
  }
  return std::abs(uv) / std::sqrt(uu * vv);
}

// Compares the first five eigenpairs with closed forms.
void spectrum_check(Outcome& o, const MercerDecomposition& d,
                    const std::function<double(int)>& lambda,
                    const std::function<double(int, double)>& mode) {
  for (int k = 1; k <= 5; ++k) {
    const double want = lambda(k);
    const double rel = std::abs(d.eigenvalues(k - 1) - want) / want;
    Eigen::VectorXd s(d.grid.n());
    for (int i = 0; i < d.grid.n(); ++i) s(i) = mode(k, d.grid.nodes()[i]);
    const double cs = cosine(d.eigenfunctions.col(k - 1).real(), s, d.grid.weights());
    o.check(rel < 1e-3, "l" + std::to_string(k) + " rel " + fmt(rel));
    o.check(cs > 0.999, "cos" + std::to_string(k) + " " + fmt(cs));
  }
}

Outcome criterion_1() {
  Outcome o;
  const GridSpec grid = GridSpec::midpoint(Interval(0.0, 0.5), 2000);
  const MercerDecomposition d = mercer_decomposition(Kernel::min_kernel(), grid);
  spectrum_check(
      o, d, [](int k) { return 1.0 / std::pow((2 * k - 1) * kPi, 2); },
      [](int k, double x) { return std::sin((2 * k - 1) * kPi * x); });
  o.check(std::abs(d.trace() - 0.125) < 1e-3, "trace " + fmt(d.trace()));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const SplineExtension e = build_spline_extension(PdFunction::catalog(CatalogId::F3), AutoTangent{});
  o.check(std::abs(e.support_radius() - 2.0) < 1e-12, "support " + fmt(e.support_radius()));
  const MercerDecomposition d = mercer_decomposition(e.as_function(), 2.0, 2000);
  spectrum_check(
      o, d, [](int k) { return 2.0 / (1.0 + std::pow(k * kPi / 2.0, 2)); },
      [](int k, double x) { return std::sin(k * kPi * x / 2.0); });
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (CatalogId id : all_catalog_ids()) {
    const PdFunction f = PdFunction::catalog(id);
    const double a = f.half_width();
    const MercerDecomposition d = mercer_decomposition(f, a, 1024);
    const double err = std::abs(d.trace() - a * f(0.0).real());
    o.check(err < 2e-3, to_string(id) + " " + fmt(err));
  }
  const MercerDecomposition f2 = mercer_decomposition(PdFunction::catalog(CatalogId::F2), 0.5, 1024);
  o.check(std::abs(f2.trace() - 0.5) < 1e-3, "F2 trace " + fmt(f2.trace()));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const RankOneSplit r = rank_one_split(GridSpec::midpoint(Interval(0.0, 0.5), 512));
  o.check(r.residual < 1e-12, "residual " + fmt(r.residual));
  const double want = (9.0 + std::sqrt(129.0)) / 48.0;
  o.check(std::abs(r.l_eigenvalue - want) < 1e-9,
          "L eigenvalue " + fmt(r.l_eigenvalue) + " vs " + fmt(want));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (CatalogId id : all_catalog_ids()) {
    const PdFunction f = PdFunction::catalog(id);
    const SpectralMeasure mu = SpectralMeasure::catalog(id);
    const double a = f.half_width();
    std::vector<double> xs;
    for (int i = 0; i <= 200; ++i) xs.push_back(-a + 2.0 * a * i / 200.0);
    const bool atomic = mu.densities().empty();
    const double tol = atomic ? 1e-12 : 1e-4;
    const ExtVerdict v = verify_ext(f, mu, xs, tol);
    o.check(v.pass, to_string(id) + " " + fmt(v.sup_error));
  }
  QuadratureSpec q;
  q.radius = 200.0;
  q.nodes_per_unit = 64;
  std::vector<double> xs;
  for (int i = 0; i <= 200; ++i) xs.push_back(-1.0 + i / 100.0);
  const ExtVerdict v = verify_ext(PdFunction::catalog(CatalogId::F3),
                                  SpectralMeasure::catalog(CatalogId::F3), xs, 1e-4, q);
  o.check(v.pass, "mu3 R=200 " + fmt(v.sup_error));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const PdFunction e = PdFunction::catalog(CatalogId::F3);
  const double s = lattice_partial_sum(e, Window::none, 10000);
  const double c = 1.0 / std::tanh(0.5);
  o.check(std::abs(s - c) < 1e-4, "Poisson " + fmt(std::abs(s - c)));
  const CircleWeights w = periodize(e, Window::unit_box, 100);
  o.check(w.positive && w.min_weight > 0.0, "min W " + fmt(w.min_weight));
  double worst = 0.0;
  for (int n = -100; n <= 100; ++n) {
    const double exact = 2.0 * (1.0 - std::exp(-0.5) * (n % 2 == 0 ? 1.0 : -1.0)) /
                         (1.0 + 4.0 * kPi * kPi * n * n);
    worst = std::max(worst, std::abs(w.at(n) - exact));
  }
  o.check(worst < 1e-10, "W vs closed form " + fmt(worst));
  const double total = lattice_partial_sum(e, Window::unit_box, 1000000);
  o.check(std::abs(total - 1.0) < 1e-6, "sum W " + fmt(std::abs(total - 1.0)));
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const PdFunction g = PdFunction::from_callable(
      Interval(-1.0, 1.0), [](double x) { return complex(1.0 / (1.0 - x * x), 0.0); },
      "1/(1-x^2)", false, true);
  const GramReport r = is_pd_grid(g, {0.0, 0.5});
  o.check(std::abs(r.min_eigenvalue + 1.0 / 3.0) < 1e-10, "min eig " + fmt(r.min_eigenvalue));
  for (CatalogId id : {CatalogId::F1, CatalogId::F4, CatalogId::F5, CatalogId::F6}) {
    const SplineExtension e = build_spline_extension(PdFunction::catalog(id), AutoTangent{});
    const Classification c = classify_extension(e, 64);
    o.check(c.verdict == ExtensionClass::refuted,
            to_string(id) + " " + to_string(c.verdict) + " " + fmt(c.witness_min_eigenvalue));
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const std::map<CatalogId, DeficiencyIndices> table = {
      {CatalogId::F1, DeficiencyIndices::zero_zero}, {CatalogId::F2, DeficiencyIndices::one_one},
      {CatalogId::F3, DeficiencyIndices::one_one},   {CatalogId::F4, DeficiencyIndices::zero_zero},
      {CatalogId::F5, DeficiencyIndices::zero_zero}, {CatalogId::F6, DeficiencyIndices::zero_zero},
      {CatalogId::F7, DeficiencyIndices::zero_zero}};
  for (const auto& [id, want] : table) {
    const IndexReport r = second_moment_index_diagnostic(SpectralMeasure::catalog(id));
    o.check(r.indices == want, to_string(id) + " " + to_string(r.indices));
  }
  const MembershipReport plus = membership_test(PdFunction::catalog(CatalogId::F3), 1.0,
                                                [](double x) { return complex(std::exp(-x), 0.0); });
  o.check(plus.verdict == MembershipVerdict::member_evidence && std::abs(plus.norm2 - 1.0) < 5e-2,
          "xi+ " + to_string(plus.verdict) + " A " + fmt(plus.norm2));
  const MembershipReport one = membership_test(PdFunction::catalog(CatalogId::F1), 1.0,
                                               [](double) { return complex(1.0, 0.0); });
  o.check(one.verdict == MembershipVerdict::diverging,
          "chi " + to_string(one.verdict) + " A " + fmt(one.norm2));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  std::vector<double> xs;
  for (int i = 0; i <= 200; ++i) xs.push_back(-1.0 + i / 100.0);
  const PdFunction tent = PdFunction::catalog(CatalogId::F2, 1.0);
  const SpectralMeasure fejer = SpectralMeasure::catalog(CatalogId::F2);
  const ShannonMembership t = ext_membership_shannon(tent, fejer, xs, 64, 1e-3);
  o.check(t.pass, "tent N " + std::to_string(t.n_used) + " err " + fmt(t.sup_error));
  const PdFunction f3 = PdFunction::catalog(CatalogId::F3);
  const SpectralMeasure mu3 = SpectralMeasure::catalog(CatalogId::F3);
  const ShannonMembership e = ext_membership_shannon(f3, mu3, xs, 64, 1e-3);
  o.check(e.pass, "F3 N " + std::to_string(e.n_used) + " err " + fmt(e.sup_error));
  const ShannonMembership m = ext_membership_shannon(tent, mu3, xs, 64, 1e-3);
  o.check(!m.pass, "mismatch err " + fmt(m.sup_error));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const double r2 = greens_residual(GreensCase::f2, TestFunction::poly_bump(0.25, 0.15, 6), 1024);
  o.check(r2 < 1e-4, "F2 " + fmt(r2));
  const double r3 = greens_residual(GreensCase::f3, TestFunction::poly_bump(0.5, 0.3, 6), 1024);
  o.check(r3 < 1e-4, "F3 " + fmt(r3));
  const BoundaryReport b3 = boundary_reproducing(
      GreensCase::f3, 0.3, [](double y) { return y * y; }, [](double y) { return 2.0 * y; });
  o.check(b3.error < 1e-8, "F3 boundary " + fmt(b3.error));
  const BoundaryReport b2 = boundary_reproducing(
      GreensCase::f2, 0.2, [](double y) { return 1.0 + y - 3.0 * y * y * y; },
      [](double y) { return 1.0 - 9.0 * y * y; });
  o.check(b2.error < 1e-8, "F2 boundary " + fmt(b2.error));
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const int m = 10000;
  std::vector<double> ts;
  for (int i = 1; i <= 20; ++i) ts.push_back(i / 20.0);
  const PathEnsemble bm = sample_paths(CovKernel::bm(), ts, m, 11);
  const CovarianceReport cb = compare_covariance(empirical_covariance(bm), cov_matrix(CovKernel::bm(), ts), m);
  o.check(cb.pass, "bm " + fmt(cb.max_abs_error));
  std::vector<double> tb;
  for (int i = 1; i <= 20; ++i) tb.push_back(i / 21.0);
  const PathEnsemble br = sample_paths(CovKernel::bridge(), tb, m, 12);
  const CovarianceReport cr =
      compare_covariance(empirical_covariance(br), cov_matrix(CovKernel::bridge(), tb), m);
  o.check(cr.pass, "bridge " + fmt(cr.max_abs_error));
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(i / 19.0);
  const PathEnsemble raw = sample_paths(CovKernel::bm(), ou_bm_times(xs), m, 13);
  const PathEnsemble ou = ou_from_bm(raw, xs);
  Eigen::MatrixXd model(20, 20);
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) model(i, j) = std::exp(-std::abs(xs[i] - xs[j]));
  }
  const CovarianceReport co = compare_covariance(empirical_covariance(ou), model, m);
  o.check(co.pass, "ou " + fmt(co.max_abs_error));
  std::vector<double> part;
  for (int i = 0; i <= 64; ++i) part.push_back(i / 64.0);
  double worst = 0.0;
  for (int seed = 0; seed < 50; ++seed) {
    const PathEnsemble b = sample_paths(CovKernel::bm(), part, m, 1000 + seed);
    const ItoReport r = ito_isometry_check(part, b);
    worst = std::max(worst, std::abs(r.z_score));
  }
  o.check(worst < 4.0, "ito max |z| " + fmt(worst));
  return o;
}

Outcome criterion_12() {
  Outcome o;
  const MomentResult g = moment(SpectralMeasure::catalog(CatalogId::F7, 3.0), 1);
  o.check(g.value && std::abs(*g.value - 3.0) < 1e-12,
          "Gamma(3) m1 " + (g.value ? fmt(*g.value - 3.0) : std::string("none")));
  std::vector<double> logs;
  for (int n = 0; n <= 40; ++n) logs.push_back(0.5 * n * n);
  const CarlemanReport ln = carleman_diagnostic(MomentSequence::from_log_values(logs, "lognormal"));
  o.check(ln.verdict == CarlemanVerdict::inconclusive, "lognormal");
  std::vector<double> gauss;
  double dfact = 1.0;
  for (int n = 0; n <= 40; ++n) {
    if (n % 2 == 1) {
      gauss.push_back(0.0);
    } else {
      if (n > 0) dfact *= n - 1;
      gauss.push_back(dfact);
    }
  }
  const CarlemanReport gs = carleman_diagnostic(MomentSequence::from_values(gauss, "gaussian"));
  o.check(gs.verdict == CarlemanVerdict::determinate_evidence,
          "gaussian sum " + fmt(gs.divergent_partial_sum));
  return o;
}

const std::map<int, std::function<Outcome()>>& criteria() {
  static const std::map<int, std::function<Outcome()>> all = {
      {1, criterion_1},  {2, criterion_2},  {3, criterion_3},   {4, criterion_4},
      {5, criterion_5},  {6, criterion_6},  {7, criterion_7},   {8, criterion_8},
      {9, criterion_9},  {10, criterion_10}, {11, criterion_11}, {12, criterion_12}};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (const auto& [id, fn] : criteria()) ids.push_back(id);
  }
  int failed = 0;
  for (int id : ids) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      Outcome o = it->second();
      pass = o.pass;
      detail = o.detail.str();
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%.1fs) %s\n", id, pass ? "PASS" : "FAIL", secs, detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
