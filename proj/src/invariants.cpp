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

#include "invforge/invariants.hpp"

#include <string>

#include "invforge/errors.hpp"

namespace invforge {

std::string_view group_name(Group g) {
  switch (g) {
    case Group::Lu:
      return "lu";
    case Group::Sl:
      return "sl";
    case Group::Slu:
      return "slu";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  if (name == "lu") return Group::Lu;
  if (name == "sl") return Group::Sl;
  if (name == "slu") return Group::Slu;
  throw InvalidArgument("unknown group '" + std::string(name) + "' (expected lu, sl or slu)");
}

DegreeBound derksen_bound(const DerksenParameters& p) {
  if (p.t < p.d) throw InvalidArgument("derksen_bound: need t >= d");
  DegreeBound b;
  b.params = p;
  mpz_class h_part, a_part;
  const mpz_class codim = p.t - p.d;
  mpz_pow_ui(h_part.get_mpz_t(), p.H.get_mpz_t(), codim.get_ui());
  mpz_pow_ui(a_part.get_mpz_t(), p.A.get_mpz_t(), p.d.get_ui());
  b.sigma = h_part * a_part;
  b.beta = mpq_class(3, 8) * mpq_class(p.s) * mpq_class(b.sigma * b.sigma);
  b.beta.canonicalize();
  mpz_cdiv_q(b.ceiling.get_mpz_t(), b.beta.get_num_mpz_t(), b.beta.get_den_mpz_t());
  return b;
}

}  // namespace invforge
