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

#include "wdist/wfamily.hpp"

#include <cmath>
#include <utility>

#include "wdist/errors.hpp"
#include "wdist/qcore.hpp"

namespace wdist {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_m(double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("m must be a finite real >= 0; got " + std::to_string(m));
}

Vector ket3(std::initializer_list<std::pair<int, Complex>> terms) {
  Vector v = Vector::Zero(8);
  for (const auto& [index, amp] : terms) v(index) = amp;
  return v;
}

}  // namespace

PureState w_m(const WmParams& params, const Register& labels) {
  require_m(params.m);
  if (!std::isfinite(params.gamma) || !std::isfinite(params.delta)) throw DomainError("phases must be finite");
  const double m = params.m;
  const double scale = 1.0 / std::sqrt(2.0 + 2.0 * m);
  const Vector v = ket3({{0b100, scale},
                         {0b010, scale * std::sqrt(m) * std::polar(1.0, params.gamma)},
                         {0b001, scale * std::sqrt(m + 1.0) * std::polar(1.0, params.delta)}});
  return PureState::normalized(labels, v);
}

PureState w_mod(const Register& labels) { return PureState(labels, ket3({{0b100, 0.5}, {0b010, 0.5}, {0b001, kInvSqrt2}})); }

PureState w_canonical(const Register& labels) {
  const double a = 1.0 / std::sqrt(3.0);
  return PureState::normalized(labels, ket3({{0b100, a}, {0b010, a}, {0b001, a}}));
}

PureState ghz(const Register& labels) { return PureState(labels, ket3({{0b000, kInvSqrt2}, {0b111, kInvSqrt2}})); }

std::string_view to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PhiPlus: return "Phi+";
    case BellKind::PhiMinus: return "Phi-";
    case BellKind::PsiPlus: return "Psi+";
    case BellKind::PsiMinus: return "Psi-";
  }
  return "?";
}

PureState bell(BellKind kind, const Register& labels) {
  Vector v = Vector::Zero(4);
  switch (kind) {
    case BellKind::PhiPlus: v << kInvSqrt2, 0, 0, kInvSqrt2; break;
    case BellKind::PhiMinus: v << kInvSqrt2, 0, 0, -kInvSqrt2; break;
    case BellKind::PsiPlus: v << 0, kInvSqrt2, kInvSqrt2, 0; break;
    case BellKind::PsiMinus: v << 0, kInvSqrt2, -kInvSqrt2, 0; break;
  }
  return PureState(labels, v);
}

MeasurementBasis bell_basis(const Register& labels) {
  std::vector<LabeledVector> vs;
  for (auto kind : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus}) {
    vs.push_back({std::string(to_string(kind)), bell(kind, labels).amplitudes()});
  }
  return MeasurementBasis(labels, std::move(vs));
}

PureState preparation_seed(const Register& labels) {
  return PureState(labels, ket3({{0b000, kInvSqrt2}, {0b101, kInvSqrt2}}));
}

namespace {

// Shared shape of U_MW(m) and U_MWB(m); they differ in which columns hold
// the 1 entries.
Matrix preparation_matrix(double m, bool basis_variant) {
  const double a = std::sqrt(m) / std::sqrt(m + 1.0);
  const double b = 1.0 / std::sqrt(m + 1.0);
  Matrix u = Matrix::Zero(4, 4);
  u(1, 0) = a;
  u(2, 0) = b;
  u(1, 3) = b;
  u(2, 3) = -a;
  if (basis_variant) {
    u(0, 1) = 1.0;
    u(3, 2) = 1.0;
  } else {
    u(0, 2) = 1.0;
    u(3, 1) = 1.0;
  }
  return u;
}

}  // namespace

UnitaryOp u_mw() { return UnitaryOp(preparation_matrix(1.0, false), "U_MW"); }
UnitaryOp u_mwb() { return UnitaryOp(preparation_matrix(1.0, true), "U_MWB"); }

UnitaryOp u_mwm(double m) {
  require_m(m);
  return UnitaryOp(preparation_matrix(m, false), "U_MWm");
}

UnitaryOp u_mwmb(double m) {
  require_m(m);
  return UnitaryOp(preparation_matrix(m, true), "U_MWmB");
}

PureState eta_plus(double m, const Register& labels) {
  require_m(m);
  const double scale = 1.0 / std::sqrt(2.0 + 2.0 * m);
  return PureState::normalized(
      labels, ket3({{0b010, scale}, {0b001, scale * std::sqrt(m)}, {0b100, scale * std::sqrt(m + 1.0)}}));
}

MeasurementBasis basis_eta_xi(double m, const Register& labels) {
  const PureState eta = eta_plus(m, labels);
  const UnitaryOp x(pauli::x(), "X");
  const UnitaryOp z(pauli::z(), "Z");
  const Register first{labels[0].index()};
  const PureState eta_minus = apply_unitary(eta, z, first);
  const PureState xi_plus = apply_unitary(eta, x, first);
  const PureState xi_minus = apply_unitary(eta_minus, x, first);
  std::vector<LabeledVector> vs{{"eta+", eta.amplitudes()},
                                {"eta-", eta_minus.amplitudes()},
                                {"xi+", xi_plus.amplitudes()},
                                {"xi-", xi_minus.amplitudes()}};
  return MeasurementBasis(labels, complete_basis(std::move(vs), 3));
}

MeasurementBasis basis_eta_zeta(const Register& labels) {
  std::vector<LabeledVector> vs{
      {"eta+", ket3({{0b010, 0.5}, {0b001, 0.5}, {0b100, kInvSqrt2}})},
      {"eta-", ket3({{0b010, 0.5}, {0b001, 0.5}, {0b100, -kInvSqrt2}})},
      {"zeta+", ket3({{0b110, 0.5}, {0b101, 0.5}, {0b000, kInvSqrt2}})},
      {"zeta-", ket3({{0b110, 0.5}, {0b101, 0.5}, {0b000, -kInvSqrt2}})},
  };
  return MeasurementBasis(labels, complete_basis(std::move(vs), 3));
}

MeasurementBasis teleport_basis(const Register& labels) {
  // Logical |0>, |1> of the sender pair.
  Vector psi0 = Vector::Zero(4);
  psi0 << 0, kInvSqrt2, kInvSqrt2, 0;
  Vector psi1 = Vector::Zero(4);
  psi1 << 1, 0, 0, 0;
  auto with_input = [](int input_bit, const Vector& pair) {
    Vector v = Vector::Zero(8);
    v.segment(input_bit * 4, 4) = pair;
    return v;
  };
  std::vector<LabeledVector> vs{
      {"T0+", (with_input(0, psi0) + with_input(1, psi1)) * kInvSqrt2},
      {"T0-", (with_input(0, psi0) - with_input(1, psi1)) * kInvSqrt2},
      {"T1+", (with_input(0, psi1) + with_input(1, psi0)) * kInvSqrt2},
      {"T1-", (with_input(0, psi1) - with_input(1, psi0)) * kInvSqrt2},
  };
  return MeasurementBasis(labels, complete_basis(std::move(vs), 3));
}

}  // namespace wdist
