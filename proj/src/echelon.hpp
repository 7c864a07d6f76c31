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

#include <gmpxx.h>

#include <map>
#include <vector>

#include "invforge/sparse.hpp"

namespace invforge {

class EchelonAccess {
 public:
  static Subspace make(Index ambient, std::vector<SparseVector> rows, std::vector<Index> pivots) {
    Subspace s(ambient);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }
};

namespace detail {

/// Gaussian-integer entry of a fraction-free row.
struct GaussEntry {
  Index col;
  mpz_class re;
  mpz_class im;
};

/// Row with Gaussian-integer entries, kept primitive (the integer gcd of all
/// parts is 1).
struct IntRow {
  std::vector<GaussEntry> entries;
  bool real = true;

  bool empty() const { return entries.empty(); }
  Index lead() const { return entries.front().col; }
};

/// Clears denominators of a Q(i) row.
IntRow to_int_row(const SparseVector& v);
/// Entries as Scalars, unnormalized.
SparseVector to_sparse(const IntRow& row, Index ambient);

/// Incremental fraction-free echelon form. Each inserted row is reduced
/// against the existing pivot rows on its leading column (p*row - a*pivot,
/// then content removal) until its lead is a fresh column or it vanishes.
class FractionFreeEchelon {
 public:
  explicit FractionFreeEchelon(Index ambient) : ambient_(ambient) {}

  /// Returns true when the row was independent of everything before it.
  bool insert(const SparseVector& v);
  bool insert(IntRow row);

  std::size_t rank() const { return pivots_.size(); }
  Index ambient() const { return ambient_; }
  const std::map<Index, IntRow>& pivot_rows() const { return pivots_; }

  /// Back-substitution and normalization to the canonical RREF.
  Subspace finish() const;

 private:
  Index ambient_;
  std::map<Index, IntRow> pivots_;
};

}  // namespace detail
}  // namespace invforge
