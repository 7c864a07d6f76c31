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

#include "invforge/lu.hpp"

#include <future>

#include "invforge/errors.hpp"

namespace invforge {

std::vector<SparsePoly> reduced_generators(const SystemShape& shape, std::size_t party) {
  if (party >= shape.parties()) {
    throw InvalidArgument("reduced_generators: party " + std::to_string(party) +
                          " out of range for shape " + shape.to_string());
  }
  const std::uint64_t c = shape.complement_dim(party);
  const unsigned d = shape.dim(party);
  std::vector<SparsePoly> out;
  out.reserve(c * c);
  for (std::uint64_t k = 0; k < c; ++k) {
    for (std::uint64_t l = 0; l < c; ++l) {
      SparsePoly u(shape, {1, 1});
      for (unsigned j = 0; j < d; ++j) {
        u.add_term({{static_cast<std::uint32_t>(shape.insert_digit(party, j, k))},
                    {static_cast<std::uint32_t>(shape.insert_digit(party, j, l))}},
                   1);
      }
      out.push_back(std::move(u));
    }
  }
  return out;
}

SparsePoly norm_invariant(const SystemShape& shape) {
  SparsePoly n(shape, {1, 1});
  for (std::uint32_t j = 0; j < shape.total_dim(); ++j) n.add_term({{j}, {j}}, 1);
  return n;
}

SparsePoly purity_invariant(const SystemShape& shape, std::size_t party) {
  if (party >= shape.parties()) throw InvalidArgument("purity_invariant: party out of range");
  const unsigned d = shape.dim(party);
  const std::uint64_t c = shape.complement_dim(party);
  // rho[j][j'] = sum_k x_{ins(j,k)} xbar_{ins(j',k)}
  std::vector<SparsePoly> rho;
  rho.reserve(d * d);
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned jp = 0; jp < d; ++jp) {
      SparsePoly e(shape, {1, 1});
      for (std::uint64_t k = 0; k < c; ++k) {
        e.add_term({{static_cast<std::uint32_t>(shape.insert_digit(party, j, k))},
                    {static_cast<std::uint32_t>(shape.insert_digit(party, jp, k))}},
                   1);
      }
      rho.push_back(std::move(e));
    }
  }
  SparsePoly tr(shape, {2, 2});
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned jp = 0; jp < d; ++jp) tr += mul_poly(rho[j * d + jp], rho[jp * d + j]);
  }
  return tr;
}

PolySubspace party_invariant_span(const SystemShape& shape, std::size_t party, unsigned m,
                                  const ComputeOptions& options) {
  const auto gens = reduced_generators(shape, party);
  return power_span(shape, {1, 1}, gens, m, options);
}

LuipBasis luip_space(const SystemShape& shape, unsigned m, const ComputeOptions& options) {
  if (m == 0) throw InvalidArgument("luip_space: half-degree must be >= 1");
  DegreeDescriptor dd(shape, {m, m}, options.guard);

  std::vector<PolySubspace> spans(shape.parties());
  if (options.workers > 1 && shape.parties() > 1) {
    std::vector<std::future<PolySubspace>> jobs;
    for (std::size_t i = 0; i < shape.parties(); ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] {
        return party_invariant_span(shape, i, m, options);
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) spans[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < shape.parties(); ++i) {
      spans[i] = party_invariant_span(shape, i, m, options);
    }
  }

  std::vector<Subspace> spaces;
  spaces.reserve(spans.size());
  for (auto& s : spans) spaces.push_back(s.space());
  return {Group::Lu, shape, m, PolySubspace(dd, intersect(spaces))};
}

DerksenParameters lu_derksen_parameters(const SystemShape& shape) {
  DerksenParameters p;
  mpz_class sum_sq = 0, prod = 1;
  for (unsigned d : shape.dims()) {
    sum_sq += d * d;
    prod *= d;
  }
  p.t = sum_sq;
  p.d = sum_sq;
  p.H = 1;
  p.A = prod;
  p.s = prod * prod;
  return p;
}

DegreeBound lu_degree_bound(const SystemShape& shape) {
  return derksen_bound(lu_derksen_parameters(shape));
}

}  // namespace invforge
