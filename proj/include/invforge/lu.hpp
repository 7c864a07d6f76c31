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

// Local unitary invariant polynomials (LUIPs).

#pragma once

#include <cstddef>
#include <vector>

#include "invforge/invariants.hpp"

namespace invforge {

// ---------------------------------------------------------------------------
// Local unitary invariants

/// Entries u_{kl}(x) = sum_j x_{ins(j,k)} xbar_{ins(j,l)} of the matrix with
/// `party` traced out; k, l run over the composite index of the other
/// parties and the list is ordered k-major. Bidegree (1,1).
std::vector<SparsePoly> reduced_generators(const SystemShape& shape, std::size_t party);

/// sum_J x_J xbar_J.
SparsePoly norm_invariant(const SystemShape& shape);

/// Tr(rho_party^2) of the unnormalized reduced state of `party`, bidegree (2,2).
SparsePoly purity_invariant(const SystemShape& shape, std::size_t party);

/// span of all m-fold products of reduced_generators(shape, party).
PolySubspace party_invariant_span(const SystemShape& shape, std::size_t party, unsigned m,
                                  const ComputeOptions& options = {});

/// Q_(2m): the intersection over parties of party_invariant_span.
LuipBasis luip_space(const SystemShape& shape, unsigned m, const ComputeOptions& options = {});

// ---------------------------------------------------------------------------
// Degree bound

/// t = d = sum d_i^2, H = 1, A = prod d_i, s = (prod d_i)^2.
DerksenParameters lu_derksen_parameters(const SystemShape& shape);
/// (3/8) * (prod d_i)^(sum 2 d_i^2 + 2), with sigma <= (prod d_i)^(sum d_i^2).
DegreeBound lu_degree_bound(const SystemShape& shape);

}  // namespace invforge
