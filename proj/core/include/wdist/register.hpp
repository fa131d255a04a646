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

#ifndef WDIST_REGISTER_HPP
#define WDIST_REGISTER_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wdist {

/// 1-based qubit label, matching the ket subscripts used for protocol
/// registers (e.g. qubits 1, 2, 5 after one swap).
class QubitLabel {
 public:
  explicit QubitLabel(int index);

  int index() const noexcept { return index_; }

  friend auto operator<=>(const QubitLabel&, const QubitLabel&) = default;

 private:
  int index_;
};

/// Ordered list of distinct qubit labels.
///
/// Ordering is big-endian: the first label is the most significant bit of
/// an amplitude index, so |100> over (1,2,3) is index 4.
class Register {
 public:
  Register() = default;
  Register(std::initializer_list<int> labels);
  explicit Register(std::vector<QubitLabel> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t dimension() const noexcept { return std::size_t{1} << labels_.size(); }

  const QubitLabel& operator[](std::size_t pos) const { return labels_[pos]; }
  const std::vector<QubitLabel>& labels() const noexcept { return labels_; }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  bool contains(QubitLabel label) const noexcept;
  /// Position of `label`; throws LabelError if absent.
  std::size_t position(QubitLabel label) const;
  /// Positions of every label of `sub`, in `sub`'s order.
  std::vector<std::size_t> positions(const Register& sub) const;
  /// Labels not present in `sub`, in this register's order.
  Register complement(const Register& sub) const;
  /// True when both registers hold the same labels, in any order.
  bool same_labels(const Register& other) const;

  /// Concatenation; throws LabelError on collision.
  Register concat(const Register& other) const;

  std::string to_string() const;

  friend bool operator==(const Register&, const Register&) = default;

 private:
  std::vector<QubitLabel> labels_;
};

/// Bit of `index` belonging to register position `pos` in an n-qubit
/// big-endian register. The one indexing helper every kernel uses.
constexpr std::size_t bit_at(std::size_t index, std::size_t pos, std::size_t n) noexcept {
  return (index >> (n - 1 - pos)) & 1U;
}

/// Splits an n-qubit index space into a selected subsystem (in a chosen
/// order) and the remaining qubits (in register order).
///
/// full_index(s, r) == selected_part(s) | rest_part(r).
class SubsystemSplit {
 public:
  SubsystemSplit(std::size_t num_qubits, std::vector<std::size_t> selected_positions);

  std::size_t selected_dimension() const noexcept { return selected_.size(); }
  std::size_t rest_dimension() const noexcept { return rest_.size(); }
  std::size_t full_index(std::size_t s, std::size_t r) const noexcept { return selected_[s] | rest_[r]; }

 private:
  std::vector<std::size_t> selected_;
  std::vector<std::size_t> rest_;
};

}  // namespace wdist

#endif  // WDIST_REGISTER_HPP
