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

#include "invforge/sl.hpp"

#include <algorithm>
#include <numeric>

#include "invforge/errors.hpp"
#include "invforge/lu.hpp"

namespace invforge {

namespace {

int permutation_sign(const std::vector<unsigned>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) sign = -sign;
    }
  }
  return sign;
}

// Advances `cols` to the next strictly increasing subset of [0, n).
bool next_subset(std::vector<std::uint64_t>& cols, std::uint64_t n) {
  const std::size_t k = cols.size();
  std::size_t i = k;
  while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++cols[i - 1];
  for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  return true;
}

bool all_divide(const SystemShape& shape, std::size_t parties, unsigned k) {
  for (std::size_t i = 0; i < parties; ++i) {
    if (k % shape.dim(i) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<SparsePoly> minor_generators(const SystemShape& shape, std::size_t party) {
  if (party >= shape.parties()) {
    throw InvalidArgument("minor_generators: party " + std::to_string(party) +
                          " out of range for shape " + shape.to_string());
  }
  const unsigned d = shape.dim(party);
  const std::uint64_t c = shape.complement_dim(party);
  std::vector<SparsePoly> out;
  if (c < d) return out;

  std::vector<unsigned> base(d);
  std::iota(base.begin(), base.end(), 0U);
  std::vector<std::uint64_t> cols(d);
  std::iota(cols.begin(), cols.end(), std::uint64_t{0});
  do {
    SparsePoly det(shape, {d, 0});
    std::vector<unsigned> perm = base;
    do {
      BiMonomial m;
      m.xs.reserve(d);
      for (unsigned r = 0; r < d; ++r) {
        m.xs.push_back(static_cast<std::uint32_t>(shape.insert_digit(party, r, cols[perm[r]])));
      }
      det.add_term(std::move(m), permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.push_back(std::move(det));
  } while (next_subset(cols, c));
  return out;
}

SlipBasis slip_space(const SystemShape& shape, unsigned k, const ComputeOptions& options) {
  if (k == 0) throw InvalidArgument("slip_space: degree must be >= 1");
  DegreeDescriptor dd(shape, {k, 0}, options.guard);
  SlipBasis zero{Group::Sl, shape, k, PolySubspace(dd, Subspace(dd.ambient_dim()))};
  if (!all_divide(shape, shape.parties(), k)) return zero;

  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < shape.parties(); ++i) {
    const auto minors = minor_generators(shape, i);
    if (minors.empty()) return zero;
    const unsigned d = shape.dim(i);
    spaces.push_back(power_span(shape, {d, 0}, minors, k / d, options).space());
  }
  return {Group::Sl, shape, k, PolySubspace(dd, intersect(spaces))};
}

SluipBasis sluip_space(const SystemShape& extended_shape, unsigned m,
                       const ComputeOptions& options) {
  if (m == 0) throw InvalidArgument("sluip_space: half-degree must be >= 1");
  if (extended_shape.parties() < 2) {
    throw InvalidArgument("sluip_space: need at least one SL party plus the unitary party");
  }
  const std::size_t sl_parties = extended_shape.parties() - 1;
  DegreeDescriptor dd(extended_shape, {m, m}, options.guard);
  SluipBasis zero{Group::Slu, extended_shape, m, PolySubspace(dd, Subspace(dd.ambient_dim()))};
  if (!all_divide(extended_shape, sl_parties, m)) return zero;

  std::vector<Subspace> spaces;
  spaces.push_back(party_invariant_span(extended_shape, sl_parties, m, options).space());
  for (std::size_t i = 0; i < sl_parties; ++i) {
    const auto minors = minor_generators(extended_shape, i);
    if (minors.empty()) return zero;
    const unsigned d = extended_shape.dim(i);
    // x and xbar transform under independent copies of SL(d), so the
    // invariants of bidegree (m,m) are products of m/d minors with m/d
    // conjugated minors.
    PolySubspace holo = power_span(extended_shape, {d, 0}, minors, m / d, options);
    std::vector<SparsePoly> conj;
    for (const auto& p : holo.polys()) conj.push_back(conjugate_poly(p));
    PolySubspace anti = PolySubspace::span(DegreeDescriptor(extended_shape, {0, m}, options.guard),
                                           conj);
    spaces.push_back(poly_product_span(holo, anti, false, options).space());
  }
  return {Group::Slu, extended_shape, m, PolySubspace(dd, intersect(spaces))};
}

DerksenParameters sl_derksen_parameters(const SystemShape& shape) {
  DerksenParameters p;
  mpz_class sum_sq = 0, prod = 1;
  for (unsigned d : shape.dims()) {
    sum_sq += d * d;
    prod *= d;
  }
  const auto n = static_cast<unsigned long>(shape.parties());
  p.t = sum_sq;
  p.d = sum_sq - n;
  p.H = shape.max_dim();
  p.A = n;
  p.s = prod;
  return p;
}

DegreeBound sl_degree_bound(const SystemShape& shape) {
  DegreeBound b = derksen_bound(sl_derksen_parameters(shape));
  b.single_party = shape.parties() == 1;
  return b;
}

}  // namespace invforge
