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


// pdext command-line front end. Every command prints a JSON report on stdout
// and, with --out, writes CSV artifacts into that directory.
// Exit status: 0 pass, 1 fail or refutation, 2 usage or input error,
// 3 numeric failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_io.hpp"
#include "pdext/pdext.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace pdext::cli {
namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct Common {
  std::string out;
  std::optional<fs::path> out_dir() const {
    return out.empty() ? std::nullopt : std::optional<fs::path>(out);
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Directory for CSV artifacts");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json to_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

// Half-width used to place sample points when the caller gives no span.
double default_span(const PdFunction& f) { return f.domain().bounded() ? f.half_width() : 1.0; }

QuadratureSpec quadrature(double radius, int npu) {
  QuadratureSpec q;
  q.radius = radius;
  q.nodes_per_unit = npu;
  return q;
}

std::vector<double> symmetric_points(double span, int n) { return closed_uniform_points(-span, span, n); }

// ---------------------------------------------------------------------------

struct PdCheckOpts {
  Common common;
  std::string f;
  int grid = 16;
  std::string points;
  double span = 0.0;
  double tol = kPsdTolerance;
};

int run_pd_check(const PdCheckOpts& o) {
  const PdFunction f = load_function(load_json(o.f));
  const std::vector<double> pts =
      o.points.empty()
          ? uniform_points(Interval(0.0, o.span > 0.0 ? o.span : default_span(f)), o.grid)
          : parse_list(o.points);
  const GramReport r = is_pd_grid(f, pts, o.tol);
  print({{"command", "pd-check"},
         {"points", r.points},
         {"eigenvalues", to_json(r.eigenvalues)},
         {"min_eigenvalue", r.min_eigenvalue},
         {"max_eigenvalue", r.max_eigenvalue},
         {"verdict", to_string(r.verdict)}});
  CsvTable t({"index", "eigenvalue"});
  for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
    t.add_row(std::vector<double>{static_cast<double>(i), r.eigenvalues(i)});
  }
  write_artifact(o.common.out_dir(), "gram_eigenvalues.csv", t.str());
  return r.verdict == GramVerdict::psd ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct PolyaOpts {
  Common common;
  std::string f;
  std::string knots;
  int budget = 64;
  std::uint64_t seed = 0x5eed;
  int samples = 400;
  double lambda_max = 50.0;
};

int run_polya_extend(const PolyaOpts& o) {
  json spec = {{"kind", "polya"}, {"base", load_json(o.f)}};
  if (!o.knots.empty()) spec["knots"] = load_json(o.knots);
  const SplineExtension e = load_extension(spec);
  const Classification c = classify_extension(e, o.budget, o.seed);
  json knots = json::array();
  for (const Knot& k : e.knots()) knots.push_back({k.x, k.value});
  spec["knots"] = knots;
  print({{"command", "polya-extend"},
         {"verdict", to_string(c.verdict)},
         {"polya_pass", c.polya.pass},
         {"polya_failures", c.polya.failures},
         {"witness", c.witness},
         {"witness_min_eigenvalue", c.witness_min_eigenvalue},
         {"grids_tried", c.grids_tried},
         {"support_radius", e.support_radius()},
         {"function", spec}});

  const double r = e.support_radius();
  CsvTable curve({"x", "value"});
  for (double x : symmetric_points(1.25 * r, o.samples)) curve.add_row(std::vector<double>{x, e(x)});
  write_artifact(o.common.out_dir(), "extension.csv", curve.str());
  if (c.verdict != ExtensionClass::refuted) {
    CsvTable dens({"lambda", "density"});
    const std::vector<double> ls = symmetric_points(o.lambda_max, o.samples);
    const DensityReport d = extension_density(e, ls);
    for (std::size_t i = 0; i < ls.size(); ++i) dens.add_row(std::vector<double>{ls[i], d.values[i]});
    write_artifact(o.common.out_dir(), "density.csv", dens.str());
  }
  write_artifact(o.common.out_dir(), "function.json", spec.dump(2) + "\n");
  return c.verdict == ExtensionClass::refuted ? kFail : kPass;
}

// ---------------------------------------------------------------------------

struct MercerOpts {
  Common common;
  std::string f;
  std::string kernel;
  double a = 1.0;
  int n = 512;
  int count = 5;
};

int run_mercer(const MercerOpts& o) {
  if (o.f.empty() == o.kernel.empty()) throw ArgumentError("give exactly one of --F and --kernel");
  json extra = json::object();
  const MercerDecomposition d = [&] {
    if (o.kernel.empty()) {
      const PdFunction f = load_function(load_json(o.f));
      extra["expected_trace"] = o.a * f(0.0).real();
      return mercer_decomposition(f, o.a, o.n);
    }
    const CovKernel k = CovKernel::from_string(o.kernel);
    return mercer_decomposition(k.as_kernel(), GridSpec::midpoint(Interval(0.0, o.a), o.n));
  }();
  const int count = std::min<int>(o.count, static_cast<int>(d.eigenvalues.size()));
  json j = {{"command", "mercer"},
            {"a", o.a},
            {"n", o.n},
            {"trace", d.trace()},
            {"rank", d.rank()},
            {"eigenvalues", to_json(d.eigenvalues.head(count))}};
  j.update(extra);
  print(j);

  CsvTable ev({"index", "eigenvalue"});
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    ev.add_row(std::vector<double>{static_cast<double>(i + 1), d.eigenvalues(i)});
  }
  write_artifact(o.common.out_dir(), "eigenvalues.csv", ev.str());
  std::vector<std::string> header = {"x"};
  for (int k = 1; k <= count; ++k) header.push_back("xi_" + std::to_string(k));
  CsvTable ef(header);
  for (int i = 0; i < d.grid.n(); ++i) {
    std::vector<double> row = {d.grid.nodes()[static_cast<std::size_t>(i)]};
    for (int k = 0; k < count; ++k) row.push_back(d.eigenfunctions(i, k).real());
    ef.add_row(row);
  }
  write_artifact(o.common.out_dir(), "eigenfunctions.csv", ef.str());
  return kPass;
}

// ---------------------------------------------------------------------------

struct ShannonOpts {
  Common common;
  std::string f;
  std::string mu;
  int n_max = 64;
  double tol = 1e-3;
  int points = 100;
};

int run_shannon(const ShannonOpts& o) {
  const PdFunction f = load_function(load_json(o.f));
  const SpectralMeasure mu = load_measure(load_json(o.mu));
  const ShannonMembership r =
      ext_membership_shannon(f, mu, symmetric_points(default_span(f), o.points), o.n_max, o.tol);
  print({{"command", "shannon"}, {"pass", r.pass}, {"sup_error", r.sup_error}, {"n_used", r.n_used}});
  CsvTable t({"N", "sup_error"});
  for (std::size_t n = 0; n < r.errors.size(); ++n) {
    t.add_row(std::vector<double>{static_cast<double>(n), r.errors[n]});
  }
  write_artifact(o.common.out_dir(), "shannon_errors.csv", t.str());
  return r.pass ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct RkhsOpts {
  Common common;
  std::string mode = "isometry";
  std::string f;
  std::string mu;
  std::string bump = "0.5,0.3,4";
  std::string xi = "one";
  std::string greens = "f3";
  double a = 1.0;
  int n = 1024;
  double tol = 1e-4;
};

// one | exp:c (e^{c x}) | poly:c0,c1,... (sum c_k x^k).
std::function<complex(double)> named_function(const std::string& s) {
  if (s == "one") return [](double) { return complex(1.0, 0.0); };
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::vector<double> args =
      colon == std::string::npos ? std::vector<double>{} : parse_list(s.substr(colon + 1));
  if (head == "exp" && args.size() == 1) {
    const double c = args[0];
    return [c](double x) { return complex(std::exp(c * x), 0.0); };
  }
  if (head == "poly" && !args.empty()) {
    return [args](double x) {
      double acc = 0.0;
      for (auto it = args.rbegin(); it != args.rend(); ++it) acc = acc * x + *it;
      return complex(acc, 0.0);
    };
  }
  throw ArgumentError("unknown function '" + s + "' (one, exp:c, poly:c0,c1,...)");
}

int run_rkhs(const RkhsOpts& o) {
  if (o.mode == "isometry") {
    const BumpSpec b = parse_bump(o.bump);
    const IsometryReport r = isometry_check(load_function(load_json(o.f)), load_measure(load_json(o.mu)),
                                            TestFunction::poly_bump(b.center, b.radius, b.k));
    const bool pass = r.abs_error <= o.tol * std::max(1.0, r.hf_norm2);
    print({{"command", "rkhs"}, {"mode", o.mode}, {"hf_norm2", r.hf_norm2},
           {"l2_norm2", r.l2_norm2}, {"abs_error", r.abs_error}, {"pass", pass}});
    return pass ? kPass : kFail;
  }
  if (o.mode == "membership") {
    const MembershipReport r = membership_test(load_function(load_json(o.f)), o.a, named_function(o.xi));
    print({{"command", "rkhs"}, {"mode", o.mode}, {"verdict", to_string(r.verdict)},
           {"norm2", r.norm2}, {"extrapolated", std::isfinite(r.extrapolated) ? json(r.extrapolated) : json()},
           {"increment_ratio", r.increment_ratio}, {"sizes", r.sizes}, {"quotients", r.quotients}});
    CsvTable t({"n", "quotient"});
    for (std::size_t i = 0; i < r.sizes.size(); ++i) {
      t.add_row(std::vector<double>{static_cast<double>(r.sizes[i]), r.quotients[i]});
    }
    write_artifact(o.common.out_dir(), "membership.csv", t.str());
    return r.verdict == MembershipVerdict::member_evidence ? kPass : kFail;
  }
  if (o.mode == "deficiency") {
    const DeficiencyComparison c = compare_deficiency(o.a, load_measure(load_json(o.mu)));
    print({{"command", "rkhs"}, {"mode", o.mode},
           {"integral", c.integral.value ? json(*c.integral.value) : json()},
           {"tail_bound", c.integral.tail_bound},
           {"second_moment_indices", to_string(c.second_moment.indices)},
           {"agree", c.agree}});
    return kPass;
  }
  if (o.mode == "greens") {
    const BumpSpec b = parse_bump(o.bump);
    const double r = greens_residual(greens_case_from_string(o.greens),
                                     TestFunction::poly_bump(b.center, b.radius, b.k), o.n);
    print({{"command", "rkhs"}, {"mode", o.mode}, {"case", o.greens}, {"residual", r}, {"pass", r < o.tol}});
    return r < o.tol ? kPass : kFail;
  }
  throw ArgumentError("unknown rkhs mode '" + o.mode + "'");
}

// ---------------------------------------------------------------------------

struct GpOpts {
  Common common;
  std::string kernel = "bm";
  std::string times;
  int n_times = 20;
  int m = 10000;
  std::uint64_t seed = 1;
  bool via_bm = false;
};

int run_gp_sim(const GpOpts& o) {
  std::vector<double> ts = o.times.empty() ? std::vector<double>{} : parse_list(o.times);
  if (ts.empty()) {
    for (int i = 1; i <= o.n_times; ++i) ts.push_back(static_cast<double>(i) / o.n_times);
  }
  PathEnsemble e;
  Eigen::MatrixXd model;
  std::string label = o.kernel;
  if (o.via_bm) {
    // Ornstein-Uhlenbeck paths built from Brownian motion at exp(alpha x).
    std::optional<double> alpha;
    if (o.kernel.rfind("ou:", 0) == 0) {
      const std::vector<double> v = parse_list(o.kernel.substr(3));
      if (v.size() != 1) throw ArgumentError("bad kernel '" + o.kernel + "'");
      alpha = v[0];
    } else if (o.kernel != "ou") {
      throw ArgumentError("--via-bm needs kernel ou or ou:alpha");
    }
    const PathEnsemble bm = sample_paths(CovKernel::bm(), ou_bm_times(ts, alpha.value_or(2.0)), o.m, o.seed);
    e = ou_from_bm(bm, ts, alpha);
    model = alpha ? cov_matrix(CovKernel::ou(*alpha), ts)
                  : cov_matrix(CovKernel::from_pd(PdFunction::catalog(CatalogId::F3)), ts);
    label += " via bm";
  } else {
    const CovKernel k = CovKernel::from_string(o.kernel);
    e = sample_paths(k, ts, o.m, o.seed);
    model = cov_matrix(k, ts);
  }
  const CovarianceReport r = compare_covariance(empirical_covariance(e), model, o.m);
  print({{"command", "gp-sim"}, {"kernel", label}, {"m", o.m}, {"seed", o.seed}, {"times", ts},
         {"max_abs_error", r.max_abs_error}, {"tolerance", r.tolerance}, {"pass", r.pass}});

  std::vector<std::string> header;
  for (std::size_t i = 0; i < ts.size(); ++i) header.push_back("t" + std::to_string(i));
  CsvTable paths(header);
  paths.add_row(ts);
  for (Eigen::Index p = 0; p < e.paths.rows(); ++p) {
    std::vector<double> row(e.paths.cols());
    for (Eigen::Index i = 0; i < e.paths.cols(); ++i) row[static_cast<std::size_t>(i)] = e.paths(p, i);
    paths.add_row(row);
  }
  write_artifact(o.common.out_dir(), "paths.csv", paths.str());
  return r.pass ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct BochnerOpts {
  Common common;
  std::string mu;
  std::string f;
  std::string points;
  int grid = 40;
  double span = 1.0;
  double radius = 0.0;
  int npu = 64;
  double tol = 1e-4;
};

int run_bochner(const BochnerOpts& o) {
  const SpectralMeasure mu = load_measure(load_json(o.mu));
  const std::vector<double> xs = o.points.empty() ? symmetric_points(o.span, o.grid) : parse_list(o.points);
  const QuadratureSpec q = quadrature(o.radius, o.npu);
  const std::vector<complex> v = bochner_transform(mu, xs, q);
  CsvTable t({"x", "re", "im"});
  for (std::size_t i = 0; i < xs.size(); ++i) t.add_row(std::vector<double>{xs[i], v[i].real(), v[i].imag()});
  write_artifact(o.common.out_dir(), "transform.csv", t.str());
  json j = {{"command", "bochner"}, {"mass", mu.total_mass()}, {"points", xs.size()}};
  int status = kPass;
  if (!o.f.empty()) {
    const ExtVerdict r = verify_ext(load_function(load_json(o.f)), mu, xs, o.tol, q);
    j["pass"] = r.pass;
    j["sup_error"] = r.sup_error;
    j["worst_x"] = r.worst_x;
    status = r.pass ? kPass : kFail;
  }
  print(j);
  return status;
}

// ---------------------------------------------------------------------------

struct PeriodizeOpts {
  Common common;
  std::string f;
  std::string window = "none";
  int n_max = 100;
};

int run_periodize(const PeriodizeOpts& o) {
  Window w;
  if (o.window == "none") {
    w = Window::none;
  } else if (o.window == "unit_box") {
    w = Window::unit_box;
  } else {
    throw ArgumentError("window must be none or unit_box");
  }
  const CircleWeights c = periodize(load_function(load_json(o.f)), w, o.n_max);
  print({{"command", "periodize"}, {"window", o.window}, {"convention", c.convention},
         {"positive", c.positive}, {"min_weight", c.min_weight}, {"partial_sum", c.partial_sum}});
  CsvTable t({"n", "weight"});
  for (int n = -c.n_max; n <= c.n_max; ++n) t.add_row(std::vector<double>{static_cast<double>(n), c.at(n)});
  write_artifact(o.common.out_dir(), "weights.csv", t.str());
  return c.positive ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct InvertOpts {
  Common common;
  std::string f;
  double a0 = -1.0;
  double b0 = 1.0;
  std::string t_schedule = "50,100,200,400";
  double tol = 1e-2;
};

int run_invert(const InvertOpts& o) {
  const PdFunction f = load_function(load_json(o.f));
  if (!f.global()) throw ArgumentError("invert needs a function defined on the whole line");
  const InversionReport r = invert([&](double x) { return f(x); }, o.a0, o.b0, parse_list(o.t_schedule), o.tol);
  print({{"command", "invert"}, {"a0", o.a0}, {"b0", o.b0}, {"value", r.value}, {"imag", r.imag},
         {"t_schedule", r.t_schedule}, {"values", r.values}, {"converged", r.converged}});
  return r.converged ? kPass : kFail;
}

// ---------------------------------------------------------------------------

struct TableOpts {
  Common common;
  std::string ids = "F1,F2,F3,F4,F5,F6,F7";
  int n = 256;
  int grid = 32;
};

int run_catalog_table(const TableOpts& o) {
  CsvTable t({"id", "pd_verdict", "index", "verify_ext_sup_error", "mercer_trace_error"});
  json rows = json::array();
  std::stringstream ss(o.ids == "none" ? std::string() : o.ids);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const CatalogId id = catalog_id_from_string(item);
    const PdFunction f = PdFunction::catalog(id);
    const SpectralMeasure mu = SpectralMeasure::catalog(id);
    const double a = f.half_width();
    const GramReport g = is_pd_grid(f, uniform_points(Interval(0.0, a), o.grid));
    const IndexReport idx = second_moment_index_diagnostic(mu);
    const ExtVerdict v = verify_ext(f, mu, symmetric_points(a, 40), 1e-4);
    const MercerDecomposition d = mercer_decomposition(f, a, o.n);
    const double trace_error = std::abs(d.trace() - a * f(0.0).real());
    t.add_row(std::vector<std::string>{to_string(id), to_string(g.verdict), to_string(idx.indices),
                                       format_number(v.sup_error), format_number(trace_error)});
    rows.push_back({{"id", to_string(id)}, {"pd_verdict", to_string(g.verdict)},
                    {"index", to_string(idx.indices)}, {"verify_ext_sup_error", v.sup_error},
                    {"mercer_trace_error", trace_error}});
  }
  print({{"command", "catalog-table"}, {"rows", rows}});
  if (o.common.out.empty()) {
    std::cerr << t.str();
  } else {
    write_artifact(o.common.out_dir(), "catalog.csv", t.str());
  }
  return kPass;
}

}  // namespace
}  // namespace pdext::cli

int main(int argc, char** argv) {
  using namespace pdext::cli;
  CLI::App app{"pdext: positive definite functions, their extensions and spectral measures"};
  app.require_subcommand(1);
  int status = kPass;
  std::function<int()> action;

  PdCheckOpts pd;
  auto* c_pd = app.add_subcommand("pd-check", "Gram-matrix test of a function on a point set");
  add_common(c_pd, pd.common);
  c_pd->add_option("--F", pd.f, "Function JSON (inline or path)")->required();
  c_pd->add_option("--grid", pd.grid, "Number of midpoints in (0, span)")->check(CLI::PositiveNumber);
  c_pd->add_option("--points", pd.points, "Explicit comma-separated points");
  c_pd->add_option("--span", pd.span, "Interval length for the grid (default: half-width of F)");
  c_pd->add_option("--tol", pd.tol, "Relative PSD tolerance")->check(CLI::PositiveNumber);
  c_pd->callback([&] { action = [&] { return run_pd_check(pd); }; });

  PolyaOpts po;
  auto* c_po = app.add_subcommand("polya-extend", "Spline extension beyond (-a, a) and its classification");
  add_common(c_po, po.common);
  c_po->add_option("--F", po.f, "Base function JSON")->required();
  c_po->add_option("--knots", po.knots, "JSON list of [x, value] knots (default: tangent line)");
  c_po->add_option("--budget", po.budget, "Largest Gram search grid")->check(CLI::PositiveNumber);
  c_po->add_option("--seed", po.seed, "Seed of the low-discrepancy search");
  c_po->add_option("--samples", po.samples, "CSV sample count")->check(CLI::PositiveNumber);
  c_po->add_option("--lambda-max", po.lambda_max, "Density CSV range")->check(CLI::PositiveNumber);
  c_po->callback([&] { action = [&] { return run_polya_extend(po); }; });

  MercerOpts me;
  auto* c_me = app.add_subcommand("mercer", "Eigen-decomposition of T_F on L2(0, a)");
  add_common(c_me, me.common);
  c_me->add_option("--F", me.f, "Function JSON");
  c_me->add_option("--kernel", me.kernel, "Covariance kernel instead of F (bm, bridge, ou:alpha, fbm:H)");
  c_me->add_option("--a", me.a, "Interval length")->check(CLI::PositiveNumber);
  c_me->add_option("--n", me.n, "Grid size")->check(CLI::Range(16, 20000));
  c_me->add_option("--count", me.count, "Eigenpairs to report")->check(CLI::PositiveNumber);
  c_me->callback([&] { action = [&] { return run_mercer(me); }; });

  ShannonOpts sh;
  auto* c_sh = app.add_subcommand("shannon", "Membership of F in Ext via Shannon lattice sums");
  add_common(c_sh, sh.common);
  c_sh->add_option("--F", sh.f, "Function JSON")->required();
  c_sh->add_option("--mu", sh.mu, "Measure JSON")->required();
  c_sh->add_option("--n-max", sh.n_max, "Largest lattice index")->check(CLI::PositiveNumber);
  c_sh->add_option("--tol", sh.tol, "Pass tolerance")->check(CLI::PositiveNumber);
  c_sh->add_option("--points", sh.points, "Evaluation points on [-a, a]")->check(CLI::PositiveNumber);
  c_sh->callback([&] { action = [&] { return run_shannon(sh); }; });

  RkhsOpts rk;
  auto* c_rk = app.add_subcommand("rkhs", "RKHS diagnostics: isometry, membership, deficiency, greens");
  add_common(c_rk, rk.common);
  c_rk->add_option("--mode", rk.mode, "isometry | membership | deficiency | greens")
      ->check(CLI::IsMember({"isometry", "membership", "deficiency", "greens"}));
  c_rk->add_option("--F", rk.f, "Function JSON");
  c_rk->add_option("--mu", rk.mu, "Measure JSON");
  c_rk->add_option("--bump", rk.bump, "Test function center,radius,k");
  c_rk->add_option("--xi", rk.xi, "Candidate function: one, exp:c, poly:c0,c1,...");
  c_rk->add_option("--case", rk.greens, "Green's identity: f2 or f3");
  c_rk->add_option("--a", rk.a, "Interval length")->check(CLI::PositiveNumber);
  c_rk->add_option("--n", rk.n, "Grid size")->check(CLI::PositiveNumber);
  c_rk->add_option("--tol", rk.tol, "Pass tolerance")->check(CLI::PositiveNumber);
  c_rk->callback([&] { action = [&] { return run_rkhs(rk); }; });

  GpOpts gp;
  auto* c_gp = app.add_subcommand("gp-sim", "Gaussian path sampling with a covariance check");
  add_common(c_gp, gp.common);
  c_gp->add_option("--kernel", gp.kernel, "bm, bridge, ou:alpha, fbm:H");
  c_gp->add_option("--times", gp.times, "Comma-separated increasing times");
  c_gp->add_option("--n-times", gp.n_times, "Uniform times i/n, i = 1..n")->check(CLI::PositiveNumber);
  c_gp->add_option("--m", gp.m, "Number of paths")->check(CLI::PositiveNumber);
  c_gp->add_option("--seed", gp.seed, "Random seed");
  c_gp->add_flag("--via-bm", gp.via_bm, "Build OU paths from Brownian motion");
  c_gp->callback([&] { action = [&] { return run_gp_sim(gp); }; });

  BochnerOpts bo;
  auto* c_bo = app.add_subcommand("bochner", "Fourier transform of a measure, optionally against F");
  add_common(c_bo, bo.common);
  c_bo->add_option("--mu", bo.mu, "Measure JSON")->required();
  c_bo->add_option("--F", bo.f, "Function JSON to verify against");
  c_bo->add_option("--points", bo.points, "Explicit comma-separated points");
  c_bo->add_option("--grid", bo.grid, "Intervals of the uniform grid on [-span, span]")->check(CLI::PositiveNumber);
  c_bo->add_option("--span", bo.span, "Half-width of the grid")->check(CLI::PositiveNumber);
  c_bo->add_option("--radius", bo.radius, "Truncation radius (0 picks it from the tails)")
      ->check(CLI::NonNegativeNumber);
  c_bo->add_option("--nodes-per-unit", bo.npu, "Quadrature density")->check(CLI::PositiveNumber);
  c_bo->add_option("--tol", bo.tol, "verify_ext tolerance")->check(CLI::PositiveNumber);
  c_bo->callback([&] { action = [&] { return run_bochner(bo); }; });

  PeriodizeOpts pe;
  auto* c_pe = app.add_subcommand("periodize", "Circle weights of F by Poisson summation");
  add_common(c_pe, pe.common);
  c_pe->add_option("--F", pe.f, "Function JSON")->required();
  c_pe->add_option("--window", pe.window, "none or unit_box");
  c_pe->add_option("--n-max", pe.n_max, "Largest |n|")->check(CLI::PositiveNumber);
  c_pe->callback([&] { action = [&] { return run_periodize(pe); }; });

  InvertOpts in;
  auto* c_in = app.add_subcommand("invert", "Measure of (a0, b0) from a characteristic function");
  add_common(c_in, in.common);
  c_in->add_option("--F", in.f, "Function JSON on the whole line")->required();
  c_in->add_option("--a0", in.a0, "Left end");
  c_in->add_option("--b0", in.b0, "Right end");
  c_in->add_option("--t-schedule", in.t_schedule, "Comma-separated truncations T");
  c_in->add_option("--tol", in.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  c_in->callback([&] { action = [&] { return run_invert(in); }; });

  TableOpts ta;
  auto* c_ta = app.add_subcommand("catalog-table", "One diagnostic row per catalog function");
  add_common(c_ta, ta.common);
  c_ta->add_option("--ids", ta.ids, "Comma-separated catalog ids, or none");
  c_ta->add_option("--n", ta.n, "Mercer grid size")->check(CLI::Range(16, 20000));
  c_ta->add_option("--grid", ta.grid, "Gram grid size")->check(CLI::PositiveNumber);
  c_ta->callback([&] { action = [&] { return run_catalog_table(ta); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    status = action();
  } catch (const pdext::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const pdext::DegenerateError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const pdext::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  }
  return status;
}
