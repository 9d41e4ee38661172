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

#ifndef PDEXT_BOCHNER_HPP_
#define PDEXT_BOCHNER_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdext/pd_function.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext {

enum class QuadratureRule { trapezoid, simpson, gauss_legendre };

/// Controls every improper lambda-integral. radius == 0 picks a truncation
/// radius from the tail descriptors so that the tail bound is below tol / 10.
struct QuadratureSpec {
  double radius = 0.0;
  int nodes_per_unit = 64;
  QuadratureRule rule = QuadratureRule::simpson;
  double tol = 1e-8;

  void validate() const;
};

/// Analytic tail of a density beyond |lambda - center| > radius.
struct TailPiece {
  double amplitude;
  double frequency;
  double center;
  double radius;
};

/// Discrete stand-in for a measure: point masses, plus analytic tail terms.
struct SpectralNodes {
  std::vector<double> lambda;
  std::vector<double> mass;
  std::vector<TailPiece> tails;
  double tail_bound = 0.0;  // mass not represented by nodes or tail terms
};

SpectralNodes discretize(const SpectralMeasure& mu, const QuadratureSpec& q);

/// Truncation radius used for one component under q.
double truncation_radius(const DensityComponent& c, const QuadratureSpec& q);

/// Integral of exp(i lambda x) over the tail terms.
complex tail_transform(const std::vector<TailPiece>& tails, double x);

struct TransformValue {
  complex value;
  double tail_bound;
};

/// sum_j w_j exp(i lambda_j x) + int exp(i lambda x) rho(lambda) d lambda.
TransformValue bochner_transform(const SpectralMeasure& mu, double x,
                                 const QuadratureSpec& q = {});
std::vector<complex> bochner_transform(const SpectralMeasure& mu,
                                       const std::vector<double>& xs,
                                       const QuadratureSpec& q = {});
/// Same as above with an existing discretization.
complex bochner_transform(const SpectralNodes& nodes, double x);

struct ExtVerdict {
  bool pass;
  double sup_error;
  double worst_x;
};

ExtVerdict verify_ext(const PdFunction& f, const SpectralMeasure& mu,
                      const std::vector<double>& grid, double tol,
                      const QuadratureSpec& q = {});

// ---------------------------------------------------------------------------
// Moments.

struct MomentResult {
  std::optional<double> value;  // empty when divergent or undecided
  bool divergent = false;
  std::vector<double> probe_radius;
  std::vector<double> probe_values;  // truncated absolute moments
};

/// int lambda^n d mu with the growth probe at R, 2R, 4R, 8R.
MomentResult moment(const SpectralMeasure& mu, int n, const QuadratureSpec& q = {});

/// m_0 .. m_N kept as logarithms so that fast-growing sequences stay finite.
class MomentSequence {
 public:
  static MomentSequence from_values(const std::vector<double>& values,
                                    std::string measure_id = "");
  /// log m_n given directly (all moments positive).
  static MomentSequence from_log_values(std::vector<double> log_values,
                                        std::string measure_id = "");

  std::size_t size() const { return log_abs_.size(); }
  double value(std::size_t n) const;
  double log_value(std::size_t n) const { return log_abs_.at(n); }
  bool positive(std::size_t n) const { return sign_.at(n) > 0; }
  const std::string& measure_id() const { return id_; }

 private:
  std::vector<double> log_abs_;
  std::vector<int> sign_;
  std::string id_;
};

enum class CarlemanVerdict { determinate_evidence, inconclusive };

struct CarlemanReport {
  double divergent_partial_sum;
  std::vector<double> terms;  // m_{2k}^{-1/(2k)}, k = 1..K
  CarlemanVerdict verdict;
};

/// Needs even moments up to 2K with K >= 5.
CarlemanReport carleman_diagnostic(const MomentSequence& moments);

enum class DeficiencyIndices { zero_zero, one_one, inconclusive };
std::string to_string(DeficiencyIndices d);

struct IndexReport {
  DeficiencyIndices indices;
  std::vector<double> probe_radius;
  std::vector<double> probe_values;
  double last_ratio;
};

/// (1,1) when the truncated second moment keeps growing as R doubles.
IndexReport second_moment_index_diagnostic(const SpectralMeasure& mu,
                                           const QuadratureSpec& q = {});

// ---------------------------------------------------------------------------
// Convolution and periodization.

SpectralMeasure convolve(const SpectralMeasure& a, const SpectralMeasure& b,
                         const QuadratureSpec& q = {});

struct DiracComb {
  double period = 1.0;
};

/// Density on one period [0, period).
struct PeriodicDensity {
  double period;
  std::vector<double> nodes;
  std::vector<double> values;
  double mass;
};

/// sum_n Phi(t - n period) for the densities of mu (atoms are rejected).
PeriodicDensity convolve(const DiracComb& comb, const SpectralMeasure& mu,
                         const QuadratureSpec& q = {});

enum class Window { none, unit_box };

struct CircleWeights {
  int n_max;
  std::vector<double> weights;  // index n + n_max
  std::string convention;
  bool positive;
  double min_weight;
  double partial_sum;

  double at(int n) const { return weights.at(static_cast<std::size_t>(n + n_max)); }
};

/// Window none: w_n = int F(x) exp(-i 2 pi n x) dx over the line.
/// Window unit_box: the same over [-1/2, 1/2].
CircleWeights periodize(const PdFunction& f, Window window, int n_max);

/// sum_{|n| <= N} w_n for large N without forming every weight (the unit
/// box uses the Dirichlet kernel).
double lattice_partial_sum(const PdFunction& f, Window window, long n_max);

/// (1/2pi) int_{-pi}^{pi} exp(-i n x) f(x) dx for |n| <= N, index n + N.
std::vector<complex> circle_fourier_coefficients(
    const std::function<complex(double)>& f, int n_max,
    const std::vector<double>& breaks = {0.0});

struct InversionReport {
  double value;
  double imag;
  std::vector<double> t_schedule;
  std::vector<double> values;
  bool converged;
};

/// (1/2pi) int_{-T}^{T} (exp(-i x a) - exp(-i x b)) / (i x) F(x) dx.
InversionReport invert(const std::function<complex(double)>& f, double a0, double b0,
                       const std::vector<double>& t_schedule, double tol = 1e-2);

}  // namespace pdext

#endif  // PDEXT_BOCHNER_HPP_
