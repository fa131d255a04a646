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

#ifndef WDIST_SRC_KERNELS_HPP
#define WDIST_SRC_KERNELS_HPP

#include <vector>

#include "wdist/register.hpp"
#include "wdist/state.hpp"

namespace wdist::detail {

// Left-multiplies `m` (2^n rows) by `op` acting on the qubits at
// `positions`, identity on the rest. `op` need not be unitary.
Matrix apply_left(const Matrix& m, const Matrix& op, const std::vector<std::size_t>& positions,
                  std::size_t num_qubits);

// (op (x) I) rho (op (x) I)^dagger.
Matrix conjugate(const Matrix& rho, const Matrix& op, const std::vector<std::size_t>& positions,
                 std::size_t num_qubits);

inline Matrix hermitize(const Matrix& m) { return (m + m.adjoint()) * 0.5; }

// index_map[j] = source index of new index j when reordering to `to`.
std::vector<std::size_t> permutation_map(const Register& from, const Register& to);

}  // namespace wdist::detail

#endif  // WDIST_SRC_KERNELS_HPP
