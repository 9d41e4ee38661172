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

#ifndef PDEXT_POLYA_HPP_
#define PDEXT_POLYA_HPP_

#include <cstdint>
#include <vector>

#include "pdext/pd_function.hpp"
#include "pdext/pdcheck.hpp"
#include "pdext/spectral_measure.hpp"

namespace pdext {

struct Knot {
  double x;
  double value;
};

/// Even continuation of a real base function on (-a, a): the base on [0, a),
/// linear segments through the knots on [a, c], zero beyond.
class SplineExtension {
 public:
  SplineExtension(PdFunction base, std::vector<Knot> knots);

  double operator()(double x) const;
  const PdFunction& base() const { return base_; }
  /// Knots from (a, F(a-)) to (c, 0).
  const std::vector<Knot>& knots() const { return knots_; }
  double a() const { return base_.half_width(); }
  double support_radius() const { return knots_.back().x; }
  /// The extension as a function on the whole line.
  PdFunction as_function() const;

 private:
  PdFunction base_;
  std::vector<Knot> knots_;
};

/// Tangent line at a- continued to its zero.
struct AutoTangent {};

SplineExtension build_spline_extension(const PdFunction& f, AutoTangent);
/// Knots with x >= a; a leading knot at a is added when missing.
SplineExtension build_spline_extension(const PdFunction& f, const std::vector<Knot>& knots);

/// One-sided slope F'(a-): closed form when known, else a three-point
/// backward difference with h = a / 256.
double endpoint_slope(const PdFunction& f);

enum class ExtensionClass { polya_pd, refuted, undecided };
std::string to_string(ExtensionClass c);

struct Classification {
  ExtensionClass verdict;
  PolyaReport polya;
  std::vector<double> witness;  // points of an indefinite Gram matrix
  double witness_min_eigenvalue = 0.0;
  int grids_tried = 0;
};

/// Pólya criterion first; otherwise Gram tests on uniform and low-discrepancy
/// point sets of sizes 8, 16, 32, 64 (capped by budget).
Classification classify_extension(const SplineExtension& e, int budget = 64,
                                  std::uint64_t seed = 0x5eed);

struct DensityReport {
  std::vector<double> lambda;
  std::vector<double> values;
  double min_value;
};

/// Phi(lambda) = (1/2pi) int_{-c}^{c} exp(-i lambda y) F_ex(y) dy.
DensityReport extension_density(const SplineExtension& e, const std::vector<double>& lambda);
double extension_density(const SplineExtension& e, double lambda);

/// Phi_ex dlambda as a measure, with the 1/lambda^2 tail from the slope jumps.
SpectralMeasure extension_measure(const SplineExtension& e);

}  // namespace pdext

#endif  // PDEXT_POLYA_HPP_
