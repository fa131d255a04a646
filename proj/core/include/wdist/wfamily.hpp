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

#ifndef WDIST_WFAMILY_HPP
#define WDIST_WFAMILY_HPP

#include <string_view>

#include "wdist/measurement.hpp"
#include "wdist/state.hpp"

namespace wdist {

/// Parameters of the W_m family
///   (|100> + sqrt(m) e^{i gamma} |010> + sqrt(m+1) e^{i delta} |001>) / sqrt(2 + 2m).
struct WmParams {
  double m = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Throws DomainError for m < 0 (or non-finite parameters).
PureState w_m(const WmParams& params, const Register& labels = {1, 2, 3});
/// 1/2 |100> + 1/2 |010> + 1/sqrt2 |001>; identical to w_m({1, 0, 0}).
PureState w_mod(const Register& labels = {1, 2, 3});
/// (|100> + |010> + |001>) / sqrt3.
PureState w_canonical(const Register& labels = {1, 2, 3});
/// (|000> + |111>) / sqrt2.
PureState ghz(const Register& labels = {1, 2, 3});

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string_view to_string(BellKind kind);
PureState bell(BellKind kind, const Register& labels = {1, 2});
/// {Phi+, Phi-, Psi+, Psi-}, labeled "Phi+", "Phi-", "Psi+", "Psi-".
MeasurementBasis bell_basis(const Register& labels);

/// |Phi+>_{13} (x) |0>_2 = (|000> + |101>)/sqrt2, the preparation seed.
PureState preparation_seed(const Register& labels = {1, 2, 3});

/// Maps the seed to W_mod when applied to qubits (1,2).
UnitaryOp u_mw();
/// Maps the seed to eta+ when applied to qubits (2,3).
UnitaryOp u_mwb();
/// General-m versions; u_mwm(1) == u_mw(). Throw DomainError for m < 0.
UnitaryOp u_mwm(double m);
UnitaryOp u_mwmb(double m);

/// eta+_m = (|010> + sqrt(m)|001> + sqrt(m+1)|100>) / sqrt(2 + 2m).
PureState eta_plus(double m = 1.0, const Register& labels = {1, 2, 3});

/// {eta+, eta- = Z1 eta+, xi+ = X1 eta+, xi- = X1 Z1 eta+} plus four
/// Gram-Schmidt completion vectors "aux0".."aux3".
MeasurementBasis basis_eta_xi(double m = 1.0, const Register& labels = {1, 2, 3});

/// eta+- = 1/2|010> + 1/2|001> +- 1/sqrt2|100>,
/// zeta+- = 1/2|110> + 1/2|101> +- 1/sqrt2|000>, plus completion.
MeasurementBasis basis_eta_zeta(const Register& labels = {3, 4, 5});

/// W_mod Schmidt decomposition across 12|3 gives logical states
/// psi0 = (|10> + |01>)/sqrt2 and psi1 = |00> on the sender pair; the
/// teleportation basis on (input, 1, 2) is
///   "T0+-" = (|0>|psi0> +- |1>|psi1>)/sqrt2,
///   "T1+-" = (|0>|psi1> +- |1>|psi0>)/sqrt2,
/// plus completion.
MeasurementBasis teleport_basis(const Register& labels = {4, 1, 2});

}  // namespace wdist

#endif  // WDIST_WFAMILY_HPP
