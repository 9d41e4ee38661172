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

#ifndef PDEXT_SPECTRAL_MEASURE_HPP_
#define PDEXT_SPECTRAL_MEASURE_HPP_

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pdext/pd_function.hpp"
#include "pdext/quadrature.hpp"

namespace pdext {

struct Atom {
  double location;
  double weight;
};

/// amplitude * cos(frequency * lambda) / lambda^2, used for |lambda| > R.
struct CosineTerm {
  double amplitude;
  double frequency;
};

enum class TailKind { compact, exponential, gaussian, rational };

/// Decay information used to truncate integrals over the line.
/// For rational tails the density behaves like the sum of `leading` terms
/// and `remainder(R)` bounds the integral of |rho - leading| over |lambda| > R.
/// For the other kinds `remainder(R)` bounds the mass outside [-R, R].
struct TailModel {
  TailKind kind = TailKind::compact;
  std::vector<CosineTerm> leading;
  std::function<double(double)> remainder;
};

/// One absolutely continuous component w * rho0(lambda / s) / s.
struct DensityComponent {
  std::string id;  // laplace, fejer, cauchy, triangle, gauss, gamma, table, callable
  double weight = 1.0;
  double scale = 1.0;
  double shape = 1.0;  // gamma order p
  std::vector<double> table_nodes;
  std::vector<double> table_values;
  std::function<double(double)> rho;
  double lo = 0.0;  // support, possibly infinite
  double hi = 0.0;
  double center = 0.0;  // tail terms are in powers of (lambda - center)
  double max_radius = std::numeric_limits<double>::infinity();  // cap for automatic truncation
  std::vector<double> kinks;  // interior points where rho is not smooth
  double mass = 0.0;
  TailModel tail;
  // Precomputed mass nodes on [lo, head_end] for a singular left endpoint.
  std::optional<QuadratureNodes> head;
  double head_end = 0.0;
};

/// Finite positive Borel measure on the line: atoms plus densities.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityComponent> densities);

  static SpectralMeasure dirac(double location = 0.0, double weight = 1.0);
  static SpectralMeasure density(DensityComponent component);

  /// 1/2 exp(-|l|).
  static DensityComponent laplace();
  /// (1/2pi) (sin(l/2)/(l/2))^2.
  static DensityComponent fejer();
  /// 1 / (pi (1 + l^2)).
  static DensityComponent cauchy();
  /// (1 - |l|)_+.
  static DensityComponent triangle();
  /// Standard normal density.
  static DensityComponent gauss();
  /// l^(p-1) exp(-l) / Gamma(p) on l > 0.
  static DensityComponent gamma(double p);
  /// Piecewise-linear density through (nodes, values), zero outside.
  static DensityComponent table(std::vector<double> nodes, std::vector<double> values);
  /// Component by name with weight and dilation, as used by the JSON schema.
  static DensityComponent named(const std::string& id, double weight = 1.0,
                                double scale = 1.0, double shape = 1.0);

  /// The measure whose transform is the catalog function F_i.
  static SpectralMeasure catalog(CatalogId id, double p = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityComponent>& densities() const { return densities_; }
  double total_mass() const { return total_mass_; }
  /// Sum of component densities at lambda.
  double density_at(double lambda) const;
  bool has_density() const { return !densities_.empty(); }

  /// Image under lambda -> s lambda (s > 0).
  SpectralMeasure pushforward_scaled(double s) const;
  /// Multiply all masses by c > 0.
  SpectralMeasure scaled_mass(double c) const;
  SpectralMeasure operator+(const SpectralMeasure& other) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityComponent> densities_;
  double total_mass_ = 0.0;
};

/// Applies mass factor w and dilation s to a component.
DensityComponent transform_component(const DensityComponent& c, double w, double s);
/// lambda -> lambda + t, mass multiplied by w.
DensityComponent shift_component(const DensityComponent& c, double t, double w = 1.0);

}  // namespace pdext

#endif  // PDEXT_SPECTRAL_MEASURE_HPP_
