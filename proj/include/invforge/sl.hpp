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

// SL-invariant (SLIP) and SL x U-invariant (SLUIP) polynomials.

#pragma once

#include <cstddef>
#include <vector>

#include "invforge/invariants.hpp"

namespace invforge {

// ---------------------------------------------------------------------------
// SL invariants

/// For each lexicographic d_i-subset of the columns of the d_i x (D/d_i)
/// flattening at `party`, the determinant of those columns (bidegree (d_i,0),
/// coefficients +-1). Empty when D/d_i < d_i.
std::vector<SparsePoly> minor_generators(const SystemShape& shape, std::size_t party);

/// Degree-k SL invariants. Zero space whenever some d_i does not divide k.
SlipBasis slip_space(const SystemShape& shape, unsigned k, const ComputeOptions& options = {});

/// Half-degree m invariants of SL(d_1..d_n) x U(d_{n+1}); the last party of
/// `extended_shape` is the unitary one. Zero space unless every SL d_i
/// divides m.
SluipBasis sluip_space(const SystemShape& extended_shape, unsigned m,
                       const ComputeOptions& options = {});

/// t = sum d_i^2, d = t - n, H = max d_i, A = n, s = prod d_i.
DerksenParameters sl_derksen_parameters(const SystemShape& shape);
/// (3/8) * prod d_i * max(d_i)^(2n) * n^(sum 2 d_i^2 - 2n).
DegreeBound sl_degree_bound(const SystemShape& shape);

}  // namespace invforge
