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

#ifndef PDEXT_PD_FUNCTION_HPP_
#define PDEXT_PD_FUNCTION_HPP_

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdext/interval.hpp"

namespace pdext {

using complex = std::complex<double>;

/// Closed-form catalog of locally defined positive definite functions.
///   F1 = 1/(1+x^2)            F2 = 1-|x|              F3 = exp(-|x|)
///   F4 = (sin(x/2)/(x/2))^2   F5 = exp(-x^2/2)        F6 = cos x
///   F7 = (1-ix)^(-p)
enum class CatalogId { F1 = 1, F2, F3, F4, F5, F6, F7 };

std::string to_string(CatalogId id);
CatalogId catalog_id_from_string(const std::string& s);
/// Default half-width a of the domain (-a, a).
double default_half_width(CatalogId id);
/// Closed-form value, valid on the whole line.
complex catalog_value(CatalogId id, double x, double p = 1.0);
/// Closed-form derivative (one-sided limits at kinks are averaged).
complex catalog_derivative(CatalogId id, double x, double p = 1.0);
const std::vector<CatalogId>& all_catalog_ids();

struct CatalogEntry {
  CatalogId id;
  double a;
  double p = 1.0;
};

/// Nodes strictly increasing; values complex; linear interpolation.
struct SampledTable {
  std::vector<double> nodes;
  std::vector<complex> values;
};

/// Continuous Hermitian function on a symmetric interval (-a, a).
/// Immutable; copies share state.
class PdFunction {
 public:
  using Eval = std::function<complex(double)>;
  enum class Kind { catalog, sampled, composite };

  static PdFunction catalog(CatalogId id, std::optional<double> a = std::nullopt,
                            double p = 1.0);
  /// The table domain is (nodes.front(), nodes.back()), which must be
  /// symmetric. With normalize the values are scaled so F(0) = 1.
  static PdFunction sampled(std::vector<double> nodes, std::vector<complex> values,
                            bool normalize = true);
  static PdFunction sampled(std::vector<double> nodes,
                            const std::vector<double>& values,
                            bool normalize = true);
  /// Wraps an arbitrary callable. When global is false, evaluation outside the
  /// closed domain throws DomainError.
  static PdFunction from_callable(const Interval& domain, Eval f,
                                  std::string description, bool normalize = true,
                                  bool real_valued = false, bool global = false,
                                  Eval derivative = nullptr);
  static PdFunction constant(const Interval& domain, double value = 1.0);

  complex operator()(double x) const;
  /// Derivative where a closed form is known.
  std::optional<complex> derivative(double x) const;

  const Interval& domain() const;
  double half_width() const { return domain().hi(); }
  Kind kind() const;
  const std::optional<CatalogEntry>& catalog_entry() const;
  /// Null unless kind() == sampled.
  const SampledTable* table() const;
  const std::string& description() const;
  bool real_valued() const;
  /// True when values are defined on the whole real line.
  bool global() const;
  /// Factor applied during normalization (1 when none was needed).
  double scale() const;

 private:
  struct Impl;
  explicit PdFunction(std::shared_ptr<const Impl> impl);
  friend PdFunction restrict(const PdFunction&, const Interval&);
  std::shared_ptr<const Impl> impl_;
};

complex evaluate(const PdFunction& f, double x);

/// Same values on a smaller symmetric interval.
PdFunction restrict(const PdFunction& f, const Interval& sub);

struct RealImagSplit {
  PdFunction even;                    // K = Re F
  std::function<double(double)> odd;  // L = Im F
};
RealImagSplit split_real_imag(const PdFunction& f);

/// Pointwise product on the intersection of the domains.
PdFunction product(const PdFunction& f, const PdFunction& g);

/// x -> conj(F(x)) = F(-x).
PdFunction conjugate_reflect(const PdFunction& f);

/// x -> F(s x) on (-a/s, a/s); s > 0.
PdFunction dilate(const PdFunction& f, double s);

}  // namespace pdext

#endif  // PDEXT_PD_FUNCTION_HPP_
