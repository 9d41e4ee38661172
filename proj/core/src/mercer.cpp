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

#include "pdext/mercer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdext/errors.hpp"
#include "pdext/linalg.hpp"
#include "pdext/parallel.hpp"

namespace pdext {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd sqrt_weights(const GridSpec& grid) {
  Eigen::VectorXd s(grid.n());
  for (int i = 0; i < grid.n(); ++i) s(i) = std::sqrt(grid.weights()[i]);
  return s;
}

void normalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  const Eigen::Index n = v.size();
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = std::abs(v(i));
    if (a < 1e-6 * peak) continue;
    const bool left = i == 0 || a >= std::abs(v(i - 1));
    const bool right = i + 1 == n || a >= std::abs(v(i + 1));
    if (left && right) {
      pick = i;
      break;
    }
  }
  const complex p = v(pick);
  v *= std::conj(p) / std::abs(p);
}

// Fourier images phi^(l) = sum_j w_j phi(x_j) exp(-i l x_j) for several columns.
class GridFourier {
 public:
  GridFourier(const GridSpec& grid, const Eigen::MatrixXcd& columns)
      : grid_(grid), weighted_(columns) {
    for (int j = 0; j < grid.n(); ++j) weighted_.row(j) *= grid.weights()[j];
  }

  Eigen::VectorXcd at(double l) const {
    const int n = grid_.n();
    Eigen::VectorXcd phase(n);
    const auto& x = grid_.nodes();
    if (grid_.rule() == GridRule::midpoint && n > 1) {
      const complex step = std::polar(1.0, -l * (x[1] - x[0]));
      complex cur = std::polar(1.0, -l * x[0]);
      for (int j = 0; j < n; ++j) {
        // Refresh periodically to bound recurrence drift.
        if (j % 64 == 0) cur = std::polar(1.0, -l * x[j]);
        phase(j) = cur;
        cur *= step;
      }
    } else {
      for (int j = 0; j < n; ++j) phase(j) = std::polar(1.0, -l * x[j]);
    }
    return weighted_.transpose() * phase;
  }

 private:
  const GridSpec& grid_;
  Eigen::MatrixXcd weighted_;
};

}  // namespace

int MercerDecomposition::rank(double rel_tol) const {
  if (eigenvalues.size() == 0) return 0;
  const double top = eigenvalues(0);
  int r = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) r += eigenvalues(i) > rel_tol * top;
  return r;
}

Eigen::MatrixXcd MercerDecomposition::gram(int count) const {
  const Eigen::MatrixXcd c = eigenfunctions.leftCols(count);
  Eigen::VectorXd w(grid.n());
  for (int i = 0; i < grid.n(); ++i) w(i) = grid.weights()[i];
  return c.adjoint() * w.asDiagonal() * c;
}

Eigen::MatrixXcd discretize(const PdFunction& f, const GridSpec& grid) {
  const double len = grid.interval().length();
  if (!f.global() && !f.domain().contains(Interval::symmetric(len), 1e-9)) {
    throw DomainError("discretize: domain of F does not cover Omega - Omega");
  }
  const int n = grid.n();
  const auto& x = grid.nodes();
  const Eigen::VectorXd s = sqrt_weights(grid);
  Eigen::MatrixXcd m(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int i = 0; i < n; ++i) m(i, j) = s(i) * f(x[i] - x[j]) * s(j);
  });
  return m;
}

Eigen::MatrixXcd discretize(const Kernel& k, const GridSpec& grid) {
  const int n = grid.n();
  const auto& x = grid.nodes();
  const Eigen::VectorXd s = sqrt_weights(grid);
  Eigen::MatrixXcd m(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int i = 0; i < n; ++i) m(i, j) = s(i) * k(x[i], x[j]) * s(j);
  });
  return m;
}

Eigen::MatrixXcd discretize(const PdFunction& f, double a, int n) {
  if (n < 16) throw ArgumentError("discretize: need n >= 16");
  return discretize(f, GridSpec::midpoint(Interval(0.0, a), n));
}

MercerDecomposition eigensystem(const Eigen::MatrixXcd& m, const GridSpec& grid) {
  if (m.rows() != grid.n() || m.cols() != grid.n()) {
    throw ArgumentError("eigensystem: matrix and grid sizes differ");
  }
  const HermitianEigen e = hermitian_eigen(m);
  const Eigen::Index n = e.values.size();
  MercerDecomposition d{grid, Eigen::VectorXd(n), Eigen::MatrixXcd(n, n)};
  const Eigen::VectorXd s = sqrt_weights(grid);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    if (!std::isfinite(e.values(src))) throw NumericError("eigensystem: non-finite eigenvalue");
    d.eigenvalues(k) = e.values(src);
    Eigen::VectorXcd v = e.vectors.col(src);
    normalize_phase(v);
    d.eigenfunctions.col(k) = v.cwiseQuotient(s.cast<complex>());
  }
  return d;
}

MercerDecomposition mercer_decomposition(const PdFunction& f, double a, int n) {
  const GridSpec grid = GridSpec::midpoint(Interval(0.0, a), n);
  return eigensystem(discretize(f, grid), grid);
}

MercerDecomposition mercer_decomposition(const Kernel& k, const GridSpec& grid) {
  return eigensystem(discretize(k, grid), grid);
}

RankOneSplit rank_one_split(const GridSpec& grid) {
  const Interval want(0.0, 0.5);
  if (std::abs(grid.interval().lo() - want.lo()) > 1e-12 ||
      std::abs(grid.interval().hi() - want.hi()) > 1e-12) {
    throw ArgumentError("rank_one_split: grid must cover (0, 1/2)");
  }
  const Eigen::MatrixXd f2 = discretize(PdFunction::catalog(CatalogId::F2), grid).real();
  const Eigen::MatrixXd e = discretize(Kernel::min_kernel(), grid).real();
  const Kernel l_kernel(Interval(0.0, 0.5), Interval(0.0, 0.5),
                        [](double x, double y) { return complex(1.0 - x - y, 0.0); }, "L");
  const Eigen::MatrixXd l = discretize(l_kernel, grid).real();
  RankOneSplit r{};
  r.residual = (f2 - 2.0 * e - l).cwiseAbs().maxCoeff();
  const SymmetricEigen le = symmetric_eigen(l);
  const Eigen::Index n = le.values.size();
  r.l_eigenvalue = le.values(n - 1);
  r.l_eigenvalue_negative = le.values(0);
  // Fit xi(x) = a + b x to the positive eigenfunction.
  const Eigen::VectorXd s = sqrt_weights(grid);
  const Eigen::VectorXd xi = le.vectors.col(n - 1).cwiseQuotient(s);
  Eigen::MatrixXd design(grid.n(), 2);
  for (int i = 0; i < grid.n(); ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = grid.nodes()[i];
  }
  const Eigen::Vector2d ab = design.colPivHouseholderQr().solve(xi);
  r.slope_ratio = ab(1) / ab(0);
  return r;
}

namespace {

OnbReport finish_onb(Eigen::MatrixXcd g, const MercerDecomposition& d, int count) {
  for (int m = 0; m < count; ++m) {
    for (int n = 0; n < count; ++n) {
      g(m, n) /= std::sqrt(d.eigenvalues(m) * d.eigenvalues(n));
    }
  }
  const Eigen::MatrixXcd dev = g - Eigen::MatrixXcd::Identity(count, count);
  return {g, dev.cwiseAbs().maxCoeff()};
}

void check_count(const MercerDecomposition& d, int count) {
  if (count < 1 || count > d.eigenvalues.size()) throw ArgumentError("rkhs_onb: bad count");
  if (!(d.eigenvalues(count - 1) > 0.0)) {
    throw DegenerateError("rkhs_onb: requested eigenvalues are not positive");
  }
}

}  // namespace

OnbReport rkhs_onb(const MercerDecomposition& d, const SpectralMeasure& mu, int count,
                   const QuadratureSpec& q) {
  check_count(d, count);
  const SpectralNodes nodes = discretize(mu, q);
  const GridFourier ft(d.grid, d.eigenfunctions.leftCols(count));
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(64, nodes.lambda.size()));
  std::vector<Eigen::MatrixXcd> partial(chunks, Eigen::MatrixXcd::Zero(count, count));
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t total = nodes.lambda.size();
    for (std::size_t j = c * total / chunks; j < (c + 1) * total / chunks; ++j) {
      const Eigen::VectorXcd v = ft.at(nodes.lambda[j]);
      partial[c].noalias() += nodes.mass[j] * v.conjugate() * v.transpose();
    }
  });
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(count, count);
  for (const auto& p : partial) g += p;
  return finish_onb(std::move(g), d, count);
}

OnbReport rkhs_onb_brownian(const MercerDecomposition& d, int count, double radius,
                            int nodes_per_unit) {
  check_count(d, count);
  if (!(radius > 0.0) || nodes_per_unit < 8) throw ConfigurationError("rkhs_onb_brownian: bad quadrature");
  const GridFourier ft(d.grid, d.eigenfunctions.leftCols(count));
  const Eigen::VectorXcd at_zero = ft.at(0.0);
  // Positive half-line; the integrand is even after conjugate pairing.
  const QuadratureNodes g = gauss_legendre_breaks({0.0, radius}, 16.0 / nodes_per_unit, 16);
  const std::size_t chunks = 64;
  std::vector<Eigen::MatrixXcd> partial(chunks, Eigen::MatrixXcd::Zero(count, count));
  parallel_for(chunks, [&](std::size_t c) {
    for (std::size_t j = c * g.size() / chunks; j < (c + 1) * g.size() / chunks; ++j) {
      const double l = g.x[j];
      const Eigen::VectorXcd vp = at_zero - ft.at(l);
      const Eigen::VectorXcd vm = at_zero - ft.at(-l);
      const double w = g.w[j] / (2.0 * kPi * l * l);
      partial[c].noalias() += w * (vp.conjugate() * vp.transpose() + vm.conjugate() * vm.transpose());
    }
  });
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(count, count);
  for (const auto& p : partial) gram += p;
  // Beyond the radius the transforms have decayed; |g|^2 -> |xi^(0)|^2.
  gram += (2.0 / (2.0 * kPi * radius)) * at_zero.conjugate() * at_zero.transpose();
  return finish_onb(std::move(gram), d, count);
}

ProjectionReport projection_bound(const Eigen::MatrixXcd& m, const MercerDecomposition& d,
                                  int n, double tol) {
  if (n < 1 || n > d.rank()) throw ArgumentError("projection_bound: N must not exceed the rank");
  // Symmetric coordinates: v_k = D^{1/2} xi_k.
  const Eigen::VectorXd s = sqrt_weights(d.grid);
  Eigen::MatrixXcd v = d.eigenfunctions.leftCols(n);
  for (Eigen::Index i = 0; i < v.rows(); ++i) v.row(i) *= s(i);
  // L2 Gram of the basis and the compression of the operator.
  const Eigen::MatrixXcd p = v.adjoint() * v;
  const Eigen::MatrixXcd a = v.adjoint() * m * v;
  // On the span: <f, Q f>_H = c^* P A^{-1} P c, <f, P f> = c^* P c.
  const Eigen::MatrixXcd q = p * a.inverse() * p;
  const Eigen::MatrixXcd diff = q - p / d.eigenvalues(0);
  const Eigen::VectorXd ev = hermitian_eigenvalues(0.5 * (diff + diff.adjoint()));
  const double scale = 1.0 / d.eigenvalues(n - 1);
  return {ev(0) >= -tol * scale, ev(0)};
}

BesselReport bessel_frame_bound(const MercerDecomposition& d,
                                const std::vector<Eigen::VectorXcd>& fs,
                                const std::vector<Eigen::VectorXcd>& tests, double tol) {
  BesselReport r{true, {}, {}};
  Eigen::VectorXd w(d.grid.n());
  for (int i = 0; i < d.grid.n(); ++i) w(i) = d.grid.weights()[i];
  for (const Eigen::VectorXcd& c : tests) {
    const Eigen::Index k = c.size();
    if (k > d.eigenvalues.size()) throw ArgumentError("bessel_frame_bound: test vector too long");
    for (Eigen::Index i = 0; i < k; ++i) {
      if (c(i) != 0.0 && !(d.eigenvalues(i) > 0.0)) {
        throw DegenerateError("bessel_frame_bound: test vector uses a null direction");
      }
    }
    double lhs = 0.0;
    for (const Eigen::VectorXcd& f : fs) {
      if (f.size() != d.grid.n()) throw ArgumentError("bessel_frame_bound: f_n off the grid");
      complex ip = 0.0;
      for (Eigen::Index i = 0; i < k; ++i) {
        if (c(i) == 0.0) continue;
        // <f, sqrt(l) xi>_H = <f, xi>_{L2} / sqrt(l).
        const complex l2 = (f.conjugate().cwiseProduct(w.cast<complex>()))
                               .dot(d.eigenfunctions.col(i).conjugate());
        ip += c(i) * l2 / std::sqrt(d.eigenvalues(i));
      }
      lhs += std::norm(ip);
    }
    const double rhs = d.eigenvalues(0) * c.squaredNorm();
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.holds = r.holds && lhs <= rhs + tol;
  }
  return r;
}

}  // namespace pdext
