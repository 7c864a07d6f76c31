// Copyright 2026 The invforge Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invforge {

/// Local dimensions (d_1, ..., d_n) of a multipartite Hilbert space.
///
/// Basis states are addressed by a flat index in mixed radix with party 0 as
/// the most significant digit. Parties are 0-based throughout the library.
class SystemShape {
 public:
  SystemShape() = default;
  /// Requires n >= 1, every d_i >= 2 and a total dimension below 2^32.
  explicit SystemShape(std::vector<unsigned> dims);

  /// "2,2,2" -> (2,2,2).
  static SystemShape parse(std::string_view text);

  std::size_t parties() const { return dims_.size(); }
  unsigned dim(std::size_t party) const { return dims_.at(party); }
  const std::vector<unsigned>& dims() const { return dims_; }
  std::uint64_t total_dim() const { return total_; }
  unsigned max_dim() const;

  std::vector<unsigned> digits(std::uint64_t flat) const;
  std::uint64_t flat(std::span<const unsigned> digits) const;

  /// D / d_party: size of the composite index over every other party.
  std::uint64_t complement_dim(std::size_t party) const;
  /// Flat index with `digit` at `party` and the remaining digits taken from
  /// the composite index `rest` (same mixed-radix order, party removed).
  std::uint64_t insert_digit(std::size_t party, unsigned digit, std::uint64_t rest) const;

  /// Shape with an extra trailing party.
  SystemShape with_party(unsigned dim) const;
  /// Shape without its last party.
  SystemShape without_last() const;

  std::string to_string() const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;

 private:
  void check_party(std::size_t party) const;

  std::vector<unsigned> dims_;
  std::uint64_t total_ = 0;
};

/// A basis-state index in both representations.
struct MultiIndex {
  std::vector<unsigned> components;
  std::uint64_t flat = 0;

  static MultiIndex from_flat(const SystemShape& shape, std::uint64_t flat) {
    return {shape.digits(flat), flat};
  }
};

}  // namespace invforge
