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

// Graded pieces of polynomial invariant rings and the degree bounds that
// bracket how far one has to go to generate them.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string_view>
#include <vector>

#include "invforge/poly.hpp"
#include "invforge/shape.hpp"

namespace invforge {

enum class Group {
  Lu,   // U(d_1) x ... x U(d_n)
  Sl,   // SL(d_1) x ... x SL(d_n), holomorphic invariants
  Slu,  // SL(d_1) x ... x SL(d_n) x U(d_{n+1}) on purified states
};

std::string_view group_name(Group g);
Group parse_group(std::string_view name);

/// One graded piece of an invariant ring.
///
/// For Lu and Slu `degree` is the half-degree m and the polynomials have
/// bidegree (m, m); for Sl it is the holomorphic degree k, bidegree (k, 0).
/// For Slu the last party of `shape` is the unitary one.
struct InvariantBasis {
  Group group = Group::Lu;
  SystemShape shape;
  unsigned degree = 0;
  PolySubspace space;

  std::size_t dimension() const { return space.dimension(); }
  std::vector<SparsePoly> polys() const { return space.polys(); }
};

using LuipBasis = InvariantBasis;
using SlipBasis = InvariantBasis;
using SluipBasis = InvariantBasis;

// ---------------------------------------------------------------------------
// Degree bounds

struct DerksenParameters {
  mpz_class t;  // variables defining the group
  mpz_class d;  // group dimension
  mpz_class A;  // max degree of the action entries
  mpz_class H;  // max degree of the defining equations
  mpz_class s;
};

struct DegreeBound {
  DerksenParameters params;
  mpz_class sigma;  // nullcone bound H^(t-d) * A^d
  mpq_class beta;   // (3/8) * s * sigma^2
  mpz_class ceiling;
  /// Single-party SL shapes evaluate the same formula read literally.
  bool single_party = false;
};

DegreeBound derksen_bound(const DerksenParameters& params);

}  // namespace invforge
