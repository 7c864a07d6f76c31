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

// Exact sparse linear algebra over Q(i).
//
// Every space is stored as its reduced row-echelon basis, which is unique for
// a given subspace and column order. All results therefore compare equal
// structurally and serialize byte-identically, whatever order the inputs came
// in.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "invforge/scalar.hpp"

namespace invforge {

using Index = std::uint64_t;

struct SparseEntry {
  Index col;
  Scalar value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse row: strictly increasing columns, no stored zeros, all < ambient_dim.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(Index ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Sorts, sums duplicates, drops zeros. Throws DimensionMismatch on a column
  /// outside [0, ambient_dim).
  static SparseVector from_entries(Index ambient_dim, std::vector<SparseEntry> entries);
  static SparseVector unit(Index ambient_dim, Index col);

  Index ambient_dim() const { return ambient_dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Index leading_col() const { return entries_.front().col; }

  /// Value at `col`, zero when absent.
  Scalar at(Index col) const;

  SparseVector& scale(const Scalar& s);
  /// this += s * other.
  SparseVector& add_scaled(const SparseVector& other, const Scalar& s);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Index ambient_dim_ = 0;
  std::vector<SparseEntry> entries_;
};

/// Caps on ambient dimension and generated rows. Hitting one raises
/// ResourceLimit; nothing is ever truncated silently.
struct ResourceGuard {
  Index max_ambient = 50'000'000;
  std::size_t max_rows = 5'000'000;

  /// Defaults, with INVFORGE_MAX_AMBIENT overriding max_ambient when set.
  static ResourceGuard from_env();

  void check_ambient(Index ambient, std::string_view what) const;
  void check_rows(std::size_t rows, std::string_view what) const;
};

struct ComputeOptions {
  std::size_t workers = 1;
  ResourceGuard guard = ResourceGuard::from_env();
};

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of an ambient space.
  explicit Subspace(Index ambient_dim) : ambient_dim_(ambient_dim) {}

  Index ambient_dim() const { return ambient_dim_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its component along the basis (pivot columns eliminated).
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis, or nullopt when v is not a member.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonAccess;
  Index ambient_dim_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<Index> pivots_;
};

/// Canonical RREF basis of the row span. Throws DimensionMismatch when a row's
/// ambient dimension differs from `ambient_dim`.
Subspace rref(std::span<const SparseVector> rows, Index ambient_dim);

/// Intersection of all spaces. Spaces are folded pairwise in ascending order
/// of dimension.
Subspace intersect(std::span<const Subspace> spaces);
Subspace intersect(const Subspace& a, const Subspace& b);

/// a + b.
Subspace sum(const Subspace& a, const Subspace& b);

using BilinearProduct = std::function<SparseVector(const SparseVector&, const SparseVector&)>;

struct ProductSpanOptions {
  /// When set and both generator lists are identical, only pairs i <= j are
  /// enumerated.
  bool commutative = false;
  ComputeOptions compute;
};

/// rref{ mul(a, b) : a in a_gens, b in b_gens }, every product living in an
/// ambient space of dimension `target_ambient`.
Subspace product_span(std::span<const SparseVector> a_gens, std::span<const SparseVector> b_gens,
                      Index target_ambient, const BilinearProduct& mul,
                      const ProductSpanOptions& options = {});
Subspace product_span(const Subspace& a, const Subspace& b, Index target_ambient,
                      const BilinearProduct& mul, const ProductSpanOptions& options = {});

/// Evaluates fn(0..count-1) on up to `workers` threads; results come back in
/// index order so downstream elimination is schedule independent.
std::vector<SparseVector> parallel_generate(std::size_t count, std::size_t workers,
                                            const std::function<SparseVector(std::size_t)>& fn);

}  // namespace invforge
