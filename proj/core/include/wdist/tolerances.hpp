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

#ifndef WDIST_TOLERANCES_HPP
#define WDIST_TOLERANCES_HPP

#include <cstddef>

namespace wdist::tol {

// Norm, hermiticity, trace, unitarity and orthonormality checks.
inline constexpr double kInvariant = 1e-12;
// Kraus completeness.
inline constexpr double kCompleteness = 1e-10;
// Outcomes below this probability carry no post-measurement state.
inline constexpr double kProbabilityFloor = 1e-12;
// Phase-insensitive state equality: |<a|b>| >= 1 - kPhase.
inline constexpr double kPhase = 1e-10;
// Eigenvalues in [-kEigenClip, 0) are treated as zero.
inline constexpr double kEigenClip = 1e-10;
// Eigenvalues below this contribute nothing to the entropy.
inline constexpr double kEntropyFloor = 1e-12;

}  // namespace wdist::tol

namespace wdist {

/// Hard cap on register size; dense storage is 4^8 complex entries at most.
inline constexpr std::size_t kMaxQubits = 8;

}  // namespace wdist

#endif  // WDIST_TOLERANCES_HPP
