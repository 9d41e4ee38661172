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

#ifndef PDEXT_RKHS_HPP_
#define PDEXT_RKHS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdext/bochner.hpp"
#include "pdext/interval.hpp"
#include "pdext/pd_function.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext {

/// Compactly supported test function with a Fourier image
/// phi^(l) = int phi(x) exp(-i l x) dx.
class TestFunction {
 public:
  using Eval = std::function<complex(double)>;

  /// (1 - t^2)^k with t = (x - center) / radius; k >= 2.
  static TestFunction poly_bump(double center, double radius, int k = 4);
  /// exp(-(x - center)^2 / (2 w^2)) cut at |x - center| = 8 w.
  static TestFunction gaussian_bump(double center, double width);
  /// Linear interpolation of samples; zero outside [nodes.front(), nodes.back()].
  static TestFunction sampled(std::vector<double> nodes, std::vector<complex> values);
  /// Arbitrary callable on [lo, hi]; the transform is computed by quadrature
  /// when none is given.
  static TestFunction from_callable(double lo, double hi, Eval f, Eval transform = nullptr,
                                    std::string name = "callable");

  complex operator()(double x) const;
  complex transform(double lambda) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  /// Points where the function is not smooth (used as quadrature breaks).
  const std::vector<double>& breaks() const { return breaks_; }
  const std::string& name() const { return name_; }
  bool inside(const Interval& omega) const;

 private:
  TestFunction(double lo, double hi, Eval f, Eval transform, std::string name,
               std::vector<double> breaks);

  double lo_;
  double hi_;
  Eval f_;
  Eval transform_;
  std::string name_;
  std::vector<double> breaks_;
};

/// An element of H_F: either F_phi = int phi(y) F(. - y) dy or samples.
class HFVector {
 public:
  static HFVector convolved(PdFunction f, TestFunction phi);
  static HFVector sampled(std::vector<double> nodes, std::vector<complex> values);

  bool is_sampled() const { return !phi_.has_value(); }
  complex operator()(double x) const;
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<complex>& values() const { return values_; }

 private:
  HFVector() = default;

  std::optional<PdFunction> f_;
  std::optional<TestFunction> phi_;
  std::vector<double> nodes_;
  std::vector<complex> values_;
};

/// int int conj(phi(x)) psi(y) F(x - y) dx dy; order is the Gauss-Legendre
/// order per panel.
complex hf_inner(const PdFunction& f, const TestFunction& phi, const TestFunction& psi,
                 int panels = 64, int order = 16);
double hf_norm2(const PdFunction& f, const TestFunction& phi);

/// F_phi(x) = int phi(y) F(x - y) dy.
complex convolve_test(const PdFunction& f, const TestFunction& phi, double x,
                      int panels = 64, int order = 16);

struct IsometryReport {
  double hf_norm2;
  double l2_norm2;
  double abs_error;
};

/// ||F_phi||^2 against int |phi^|^2 dmu.
IsometryReport isometry_check(const PdFunction& f, const SpectralMeasure& mu,
                              const TestFunction& phi, const QuadratureSpec& q = {});

/// x -> int exp(i l x) f(l) dmu(l) at the given points. Throws DomainError
/// when the truncated int |f|^2 dmu keeps growing with the radius.
HFVector adjoint_apply(const SpectralMeasure& mu, const std::function<complex(double)>& f,
                       const std::vector<double>& xs, const QuadratureSpec& q = {});

enum class MembershipVerdict { member_evidence, diverging };
std::string to_string(MembershipVerdict v);

struct MembershipSchedule {
  int base = 32;     // grid size at the first level
  int levels = 5;    // grid doubles per level
  double cutoff = 1e-4;       // relative pseudo-inverse cutoff at level 0
  double cutoff_decay = 1e-2; // factor applied per level
  double growth = 2.0;        // diverging above this ratio per level
  double stable_tol = 2e-2;   // relative size of the extrapolated remaining growth
};

struct MembershipReport {
  MembershipVerdict verdict;
  double norm2;         // last A(h), the squared H_F norm estimate
  double extrapolated;  // geometric extrapolation of A(h); inf when not contracting
  double increment_ratio;
  std::vector<int> sizes;
  std::vector<double> quotients;
};

/// Generalized Rayleigh quotient sup |int psi xi|^2 / ||F_psi||^2 over grid
/// test functions on (0, a), refined by the schedule. Diverging when A grows
/// by more than schedule.growth in one level or when the increments do not
/// contract fast enough for the extrapolated limit to lie within stable_tol.
MembershipReport membership_test(const PdFunction& f, double a,
                                 const std::function<complex(double)>& xi,
                                 const MembershipSchedule& schedule = {});

struct DeficiencyIntegral {
  std::optional<double> value;
  bool divergent;
  double tail_bound;
};

/// int (e^{2a} + 1 - 2 e^a cos(l a)) / (1 + l^2) dmu(l).
DeficiencyIntegral deficiency_integral(double a, const SpectralMeasure& mu,
                                       const QuadratureSpec& q = {});

struct DeficiencyComparison {
  DeficiencyIntegral integral;
  IndexReport second_moment;
  bool agree;  // finite integral together with indices (1,1)
};

/// Both diagnostics side by side; the second-moment verdict is the
/// authoritative one.
DeficiencyComparison compare_deficiency(double a, const SpectralMeasure& mu,
                                        const QuadratureSpec& q = {});

enum class GreensCase { f2, f3 };
std::string to_string(GreensCase c);
GreensCase greens_case_from_string(const std::string& s);

/// Max interior residual of phi + u''/2 (F2 on (0, 1/2)) or
/// phi - (u - u'')/2 (F3 on (0, 1)) with u = T_F phi on n grid points.
double greens_residual(GreensCase which, const TestFunction& phi, int n = 1024);

struct BoundaryReport {
  double lhs;
  double rhs;
  double error;
};

/// Energy form of F_x against g versus the closed boundary formula.
BoundaryReport boundary_reproducing(GreensCase which, double x,
                                    const std::function<double(double)>& g,
                                    const std::function<double(double)>& dg);

}  // namespace pdext

#endif  // PDEXT_RKHS_HPP_
