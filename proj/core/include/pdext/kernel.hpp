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

#ifndef PDEXT_KERNEL_HPP_
#define PDEXT_KERNEL_HPP_

#include <functional>
#include <string>

#include "pdext/interval.hpp"
#include "pdext/pd_function.hpp"

namespace pdext {

/// Hermitian kernel K(x, y) on a product of intervals.
class Kernel {
 public:
  using Eval = std::function<complex(double, double)>;

  Kernel(Interval x_domain, Interval y_domain, Eval f, std::string name);

  /// min(x, y) on (0, inf).
  static Kernel min_kernel();
  /// min(x, y) - x y on (0, 1).
  static Kernel bridge();
  /// exp(-(x + y)) on (0, inf); rank one.
  static Kernel exp_sum();
  /// 1 / (1 - x y) on (-1, 1).
  static Kernel cauchy();
  /// (|x|^2H + |y|^2H - |x - y|^2H) / 2; H in (0, 1).
  static Kernel fbm(double hurst);
  /// F(x - y); rejects pairs whose difference leaves the domain of F.
  static Kernel from_pd(const PdFunction& f);

  complex operator()(double x, double y) const;
  const Interval& x_domain() const { return x_domain_; }
  const Interval& y_domain() const { return y_domain_; }
  const std::string& name() const { return name_; }

 private:
  Interval x_domain_;
  Interval y_domain_;
  Eval f_;
  std::string name_;
};

}  // namespace pdext

#endif  // PDEXT_KERNEL_HPP_
