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

// Sparse bihomogeneous polynomials in the amplitudes x_J and their
// conjugates xbar_K of a multipartite state.

#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "invforge/scalar.hpp"
#include "invforge/shape.hpp"
#include "invforge/sparse.hpp"

namespace invforge {

struct Bidegree {
  unsigned p = 0;  // degree in x
  unsigned q = 0;  // degree in xbar

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
};

/// x_{xs[0]} ... x_{xs[p-1]} * xbar_{xbars[0]} ... xbar_{xbars[q-1]}, both
/// lists sorted ascending. Ordered lexicographically on (xs, xbars).
struct BiMonomial {
  std::vector<std::uint32_t> xs;
  std::vector<std::uint32_t> xbars;

  Bidegree bidegree() const {
    return {static_cast<unsigned>(xs.size()), static_cast<unsigned>(xbars.size())};
  }
  /// Sorts both lists in place.
  void canonicalize();

  friend auto operator<=>(const BiMonomial&, const BiMonomial&) = default;
  friend bool operator==(const BiMonomial&, const BiMonomial&) = default;
};

BiMonomial multiply(const BiMonomial& a, const BiMonomial& b);

class SparsePoly {
 public:
  using TermMap = std::map<BiMonomial, Scalar>;

  SparsePoly() = default;
  SparsePoly(SystemShape shape, Bidegree bidegree)
      : shape_(std::move(shape)), bidegree_(bidegree) {}

  static SparsePoly monomial(const SystemShape& shape, BiMonomial m, const Scalar& coeff = 1);
  /// The constant 1 of bidegree (0,0).
  static SparsePoly one(const SystemShape& shape) { return monomial(shape, {}, 1); }

  const SystemShape& shape() const { return shape_; }
  Bidegree bidegree() const { return bidegree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m. The monomial is canonicalized first; it must match the
  /// polynomial's bidegree and index range.
  void add_term(BiMonomial m, const Scalar& c);
  Scalar coefficient(const BiMonomial& m) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& scale(const Scalar& s);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  Scalar evaluate(std::span<const Scalar> amplitudes) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> amplitudes) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void check_compatible(const SparsePoly& o, const char* what) const;

  SystemShape shape_;
  Bidegree bidegree_;
  TermMap terms_;
};

/// Exact product; bidegrees add.
SparsePoly mul_poly(const SparsePoly& a, const SparsePoly& b);
SparsePoly pow_poly(const SparsePoly& a, unsigned n);
/// Swaps xs and xbars and conjugates every coefficient.
SparsePoly conjugate_poly(const SparsePoly& p);

/// Flattened polynomial for repeated double-precision evaluation.
class FloatPoly {
 public:
  FloatPoly() = default;
  explicit FloatPoly(const SparsePoly& p);

  std::complex<double> evaluate(std::span<const std::complex<double>> amplitudes) const;
  /// Same, with conj(amplitudes) precomputed by the caller.
  std::complex<double> evaluate(std::span<const std::complex<double>> amplitudes,
                                std::span<const std::complex<double>> conjugates) const;
  Bidegree bidegree() const { return bidegree_; }

 private:
  Bidegree bidegree_;
  std::vector<std::uint32_t> factors_;  // p + q indices per term
  std::vector<std::complex<double>> coeffs_;
};

/// The ambient space of all bimonomials of one bidegree, enumerated in
/// canonical order. ambient_dim = C(D+p-1, p) * C(D+q-1, q).
class DegreeDescriptor {
 public:
  DegreeDescriptor() = default;
  /// Throws ResourceLimit if the ambient dimension overflows or exceeds the
  /// guard.
  DegreeDescriptor(SystemShape shape, Bidegree bidegree,
                   const ResourceGuard& guard = ResourceGuard::from_env());

  const SystemShape& shape() const { return shape_; }
  Bidegree bidegree() const { return bidegree_; }
  Index ambient_dim() const { return ambient_; }

  Index index_of(const BiMonomial& m) const;
  BiMonomial monomial_at(Index index) const;

  /// Throws DimensionMismatch on a shape or bidegree mismatch.
  SparseVector to_coeff_vector(const SparsePoly& p) const;
  SparsePoly from_coeff_vector(const SparseVector& v) const;

  friend bool operator==(const DegreeDescriptor& a, const DegreeDescriptor& b) {
    return a.shape_ == b.shape_ && a.bidegree_ == b.bidegree_;
  }

 private:
  std::uint64_t multisets(std::uint64_t alphabet, unsigned size) const;
  Index rank(std::span<const std::uint32_t> sorted, unsigned size) const;
  std::vector<std::uint32_t> unrank(Index rank, unsigned size) const;

  SystemShape shape_;
  Bidegree bidegree_;
  Index ambient_ = 0;
  Index xbar_count_ = 0;
  // binom_[n][k] = C(n, k) for n <= D + max(p,q), k <= max(p,q) + 1.
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// A linear space of polynomials of one bidegree, stored as a canonical RREF
/// basis of coefficient vectors.
class PolySubspace {
 public:
  PolySubspace() = default;
  PolySubspace(DegreeDescriptor dd, Subspace space);
  /// rref of the span of `polys`, each of which must match dd.
  static PolySubspace span(const DegreeDescriptor& dd, std::span<const SparsePoly> polys);

  const DegreeDescriptor& descriptor() const { return dd_; }
  const Subspace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }

  /// Basis polynomials in canonical (pivot) order.
  std::vector<SparsePoly> polys() const;
  bool contains(const SparsePoly& p) const;
  std::optional<std::vector<Scalar>> coordinates(const SparsePoly& p) const;

  friend bool operator==(const PolySubspace&, const PolySubspace&) = default;

 private:
  DegreeDescriptor dd_;
  Subspace space_;
};

/// All size-`m` multisets of {0..count-1}, lexicographic.
std::vector<std::vector<std::uint32_t>> multisets_of(std::size_t count, unsigned m);

/// Span of every m-fold product (multiset, with repetition) of `generators`,
/// each of which must have the given shape and bidegree. An empty generator
/// list yields the zero space of bidegree m * generator_bidegree.
PolySubspace power_span(const SystemShape& shape, Bidegree generator_bidegree,
                        std::span<const SparsePoly> generators, unsigned m,
                        const ComputeOptions& options = {});

/// Span of { a * b : a in basis(a), b in basis(b) }, computed by the generic
/// exact-algebra product span.
PolySubspace poly_product_span(const PolySubspace& a, const PolySubspace& b, bool commutative,
                               const ComputeOptions& options = {});

}  // namespace invforge
