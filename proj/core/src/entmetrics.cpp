// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wdist/entmetrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wdist/errors.hpp"
#include "wdist/qcore.hpp"

namespace wdist {

namespace {

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double low = es.eigenvalues().minCoeff();
  if (low < -tol::kEigenClip) throw InvariantError("state has a negative eigenvalue " + std::to_string(low));
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

// Square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), descending,
// taken as the singular values of sqrt(rho) (sy x sy) sqrt(rho)*.
std::array<double, 4> wootters_roots(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) {
    throw DimensionError("concurrence needs a two-qubit state; got " + std::to_string(rho.num_qubits()) + " qubits");
  }
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix s = psd_sqrt(rho.matrix());
  const Matrix t = s * yy * s.conjugate();
  const Eigen::JacobiSVD<Matrix> svd(t);
  const Eigen::VectorXd sv = svd.singularValues();
  return {sv(0), sv(1), sv(2), sv(3)};
}

}  // namespace

double concurrence_margin(const DensityMatrix& rho) {
  const auto l = wootters_roots(rho);
  return l[0] - l[1] - l[2] - l[3];
}

double concurrence(const DensityMatrix& rho) { return std::clamp(concurrence_margin(rho), 0.0, 1.0); }

double two_tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

namespace {

void require_three(std::size_t n) {
  if (n != 3) throw DimensionError("tangle report needs a three-qubit state; got " + std::to_string(n) + " qubits");
}

DensityMatrix pair(const DensityMatrix& rho, std::size_t i, std::size_t j) {
  const Register& q = rho.qubits();
  return partial_trace(rho, Register{q[i].index(), q[j].index()});
}

}  // namespace

TangleReport tangle_report(const DensityMatrix& rho) {
  require_three(rho.num_qubits());
  TangleReport t;
  t.tau_12 = two_tangle(pair(rho, 0, 1));
  t.tau_13 = two_tangle(pair(rho, 0, 2));
  t.tau_23 = two_tangle(pair(rho, 1, 2));
  t.tau_av = (t.tau_12 + t.tau_13 + t.tau_23) / 3.0;
  return t;
}

TangleReport tangle_report(const PureState& psi) {
  TangleReport t = tangle_report(DensityMatrix::from_pure(psi));
  t.tau_3 = three_tangle_pure(psi);
  return t;
}

double MarginReport::max() const noexcept { return std::max({m_12, m_13, m_23}); }

MarginReport margin_report(const DensityMatrix& rho) {
  require_three(rho.num_qubits());
  return {concurrence_margin(pair(rho, 0, 1)), concurrence_margin(pair(rho, 0, 2)),
          concurrence_margin(pair(rho, 1, 2))};
}

double three_tangle_pure(const PureState& psi) {
  require_three(psi.num_qubits());
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const Register& q = psi.qubits();
  const Matrix r1 = partial_trace(rho, Register{q[0].index()}).matrix();
  const double tau_1 = 4.0 * std::real(r1(0, 0) * r1(1, 1) - r1(0, 1) * r1(1, 0));
  const double residual = tau_1 - two_tangle(pair(rho, 0, 1)) - two_tangle(pair(rho, 0, 2));
  return std::clamp(residual, 0.0, 1.0);
}

Threshold find_threshold(const std::function<double(double)>& metric, double lo, double hi, double tol,
                         std::string label, double zero) {
  if (!(lo < hi) || !(tol > 0.0)) throw DomainError("find_threshold: need lo < hi and tol > 0");
  const double f_lo = metric(lo);
  const double f_hi = metric(hi);
  if (!(f_lo > zero) || f_hi > zero) {
    throw BracketError("metric '" + label + "' does not vanish inside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]: f(lo)=" + std::to_string(f_lo) + ", f(hi)=" + std::to_string(f_hi));
  }
  const double lo0 = lo;
  const double hi0 = hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (metric(mid) > zero) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Threshold{hi, std::move(label), lo0, hi0, tol};
}

Minimum find_minimum(const std::function<double(double)>& f, double lo, double hi, double tol, std::string label) {
  if (!(lo < hi) || !(tol > 0.0)) throw DomainError("find_minimum: need lo < hi and tol > 0");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return Minimum{x, f(x), std::move(label)};
}

}  // namespace wdist
