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

#include "pdext/kernel.hpp"

#include <cmath>
#include <limits>

#include "pdext/errors.hpp"

namespace pdext {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Kernel::Kernel(Interval x_domain, Interval y_domain, Eval f, std::string name)
    : x_domain_(x_domain), y_domain_(y_domain), f_(std::move(f)), name_(std::move(name)) {
  if (!f_) throw ArgumentError("kernel: empty callable");
}

Kernel Kernel::min_kernel() {
  return Kernel({0.0, kInf}, {0.0, kInf},
                [](double x, double y) { return complex(std::min(x, y), 0.0); }, "min");
}

Kernel Kernel::bridge() {
  return Kernel({0.0, 1.0}, {0.0, 1.0},
                [](double x, double y) { return complex(std::min(x, y) - x * y, 0.0); },
                "bridge");
}

Kernel Kernel::exp_sum() {
  return Kernel({0.0, kInf}, {0.0, kInf},
                [](double x, double y) { return complex(std::exp(-(x + y)), 0.0); },
                "exp_sum");
}

Kernel Kernel::cauchy() {
  return Kernel({-1.0, 1.0}, {-1.0, 1.0},
                [](double x, double y) { return complex(1.0 / (1.0 - x * y), 0.0); },
                "cauchy");
}

Kernel Kernel::fbm(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) throw ParameterError("fbm: H must lie in (0, 1)");
  const double e = 2.0 * hurst;
  return Kernel(Interval::real_line(), Interval::real_line(),
                [e](double x, double y) {
                  return complex(0.5 * (std::pow(std::abs(x), e) + std::pow(std::abs(y), e) -
                                        std::pow(std::abs(x - y), e)),
                                 0.0);
                },
                "fbm");
}

Kernel Kernel::from_pd(const PdFunction& f) {
  const Interval& d = f.domain();
  return Kernel(d, d,
                [f](double x, double y) {
                  const double t = x - y;
                  if (!f.domain().contains_closed(t)) {
                    throw DomainError("kernel difference outside domain of F");
                  }
                  return f(t);
                },
                "pd:" + f.description());
}

complex Kernel::operator()(double x, double y) const {
  if (!x_domain_.contains_closed(x) || !y_domain_.contains_closed(y)) {
    throw DomainError("kernel " + name_ + " evaluated outside its domain");
  }
  return f_(x, y);
}

}  // namespace pdext
