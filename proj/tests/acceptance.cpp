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

// Acceptance run: one [PASS]/[FAIL] line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "invforge/equivalence.hpp"
#include "invforge/errors.hpp"
#include "invforge/lu.hpp"
#include "invforge/sl.hpp"
#include "oracles.hpp"

namespace {

using namespace invforge;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << msg;
    }
  }
};

std::vector<std::vector<SparsePoly>> party_generators(const SystemShape& s) {
  std::vector<std::vector<SparsePoly>> g;
  for (std::size_t i = 0; i < s.parties(); ++i) g.push_back(reduced_generators(s, i));
  return g;
}

void criterion1(Check& c) {
  for (const auto& dims : std::vector<std::vector<unsigned>>{{2}, {2, 2}, {2, 2, 2}, {3, 3}}) {
    const SystemShape s(dims);
    const auto t0 = Clock::now();
    const auto b = luip_space(s, 1);
    const double dt = seconds_since(t0);
    const auto n = norm_invariant(s);
    c.require(b.dimension() == 1, s.to_string() + ": dim != 1");
    c.require(b.space.contains(n), s.to_string() + ": norm not in span");
    const std::vector<SparsePoly> just_norm{n};
    c.require(PolySubspace::span(b.space.descriptor(), just_norm) == b.space,
              s.to_string() + ": span differs from span{norm}");
    c.require(dt < 1.0, s.to_string() + ": took " + std::to_string(dt) + " s");
  }
}

void criterion2(Check& c) {
  const auto t0 = Clock::now();
  for (const auto& [dims, expected] :
       std::vector<std::pair<std::vector<unsigned>, std::size_t>>{{{2, 2}, 2}, {{2, 2, 2}, 4}}) {
    const SystemShape s(dims);
    const auto b = luip_space(s, 2);
    const auto oracle_dim = float_intersection_dim(s, party_generators(s), 2, 1e-8);
    c.require(b.dimension() == expected, s.to_string() + ": dim " + std::to_string(b.dimension()));
    c.require(b.dimension() == oracle_dim,
              s.to_string() + ": float oracle gives " + std::to_string(oracle_dim));
    c.require(b.dimension() == oracle::trace_invariant_rank(s, 2, 3),
              s.to_string() + ": trace oracle disagrees");
    c.require(b.space.contains(purity_invariant(s, 0)), s.to_string() + ": purity not a member");
  }
  const double dt = seconds_since(t0);
  c.require(dt < 30.0, "took " + std::to_string(dt) + " s");
}

void criterion3(Check& c) {
  const SystemShape s({2, 2, 2});
  const auto t0 = Clock::now();
  const auto b = luip_space(s, 3);
  const double dt = seconds_since(t0);
  const auto oracle_dim = float_intersection_dim(s, party_generators(s), 3, 1e-8);
  c.require(b.dimension() == oracle_dim, "dim " + std::to_string(b.dimension()) +
                                             " vs float oracle " + std::to_string(oracle_dim));
  const auto polys = b.polys();
  const auto r = numeric_invariance_check(polys, s, {100, 1, 11, 1e-9, Group::Lu});
  c.require(r.passed, "numeric invariance failed");
  c.require(dt < 600.0, "took " + std::to_string(dt) + " s");
  std::cout << "    dim Q6(2,2,2) = " << b.dimension() << ", computed in " << dt << " s\n";
}

void criterion4(Check& c) {
  const SystemShape s({2, 2, 2});
  const auto bases = lu_bases(s, 2);
  const auto ghz = ghz_state(3, 2), w = w_state(3);
  const auto v = compare_lu(bases, ghz, w, Mode::Exact);
  c.require(v.kind == VerdictKind::Distinguished, "not distinguished");
  // Values along the purity direction, through its basis coordinates.
  const auto coords = bases[1].space.coordinates(purity_invariant(s, 0));
  c.require(coords.has_value(), "purity not in Q4");
  if (!coords) return;
  const auto fg = fingerprint(bases, ghz, Mode::Exact);
  const auto fw = fingerprint(bases, w, Mode::Exact);
  Scalar pg, pw;
  for (std::size_t j = 0; j < coords->size(); ++j) {
    pg += (*coords)[j] * *fg.entries[1].values[j].exact;
    pw += (*coords)[j] * *fw.entries[1].values[j].exact;
  }
  c.require(pg == Scalar(mpq_class(1, 2)), "GHZ purity " + pg.to_string());
  c.require(pw == Scalar(mpq_class(5, 9)), "W purity " + pw.to_string());
  // Independent check on the reduced matrices.
  const auto og = oracle::trace_square(oracle::reduced_matrix(s, ghz.exact_amplitudes(), 0)) /
                  ghz.norm_squared_exact().pow(2);
  const auto ow = oracle::trace_square(oracle::reduced_matrix(s, w.exact_amplitudes(), 0)) /
                  w.norm_squared_exact().pow(2);
  c.require(og == pg && ow == pw, "reduced-matrix oracle disagrees");
}

void criterion5(Check& c) {
  const auto t0 = Clock::now();
  const SystemShape s2({2, 2});
  const auto b2 = slip_space(s2, 2);
  c.require(b2.dimension() == 1, "dim slip(2,2;2) != 1");
  const auto det = minor_generators(s2, 0).at(0);
  c.require(PolySubspace::span(b2.space.descriptor(), std::vector{det}) == b2.space,
            "slip(2,2;2) is not span{det}");
  const auto bell = standard_state("bell", s2);
  const Scalar dv = b2.polys()[0].evaluate(bell.exact_amplitudes());
  c.require(dv.norm() / bell.norm_squared_exact().norm() == mpq_class(1, 4),
            "|det|^2 on Bell is not 1/4");

  const SystemShape s3({2, 2, 2});
  c.require(slip_space(s3, 2).dimension() == 0, "dim slip(2,2,2;2) != 0");
  const auto b4 = slip_space(s3, 4);
  c.require(b4.dimension() == 1, "dim slip(2,2,2;4) != 1");
  if (b4.dimension() == 1) {
    const auto h = b4.polys()[0];
    c.require(h.evaluate(w_state(3).exact_amplitudes()).is_zero(), "nonzero on W");
    c.require(!h.evaluate(ghz_state(3, 2).exact_amplitudes()).is_zero(), "zero on GHZ");
  }
  const double dt = seconds_since(t0);
  c.require(dt < 60.0, "took " + std::to_string(dt) + " s");
}

std::string big_str(const oracle::BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

void criterion6(Check& c) {
  const auto b22 = lu_degree_bound(SystemShape({2, 2}));
  c.require(b22.beta == mpq_class("25769803776"), "lu(2,2) = " + rational_to_string(b22.beta));
  c.require(rational_to_string(b22.beta) == big_str(oracle::lu_bound_formula({2, 2})),
            "lu(2,2) oracle");
  const auto b2 = lu_degree_bound(SystemShape({2}));
  c.require(b2.beta == 384, "lu(2) = " + rational_to_string(b2.beta));
  c.require(rational_to_string(b2.beta) == big_str(oracle::lu_bound_formula({2})), "lu(2) oracle");
  const auto b3 = lu_degree_bound(SystemShape({3}));
  c.require(b3.beta == mpq_class("10460353203/8"), "lu(3) = " + rational_to_string(b3.beta));
  c.require(b3.ceiling == mpz_class("1307544151"), "lu(3) ceiling");
  c.require(rational_to_string(b3.beta) == big_str(oracle::lu_bound_formula({3})), "lu(3) oracle");
  c.require(b3.ceiling.get_str() == oracle::ceil_of(oracle::lu_bound_formula({3})).str(),
            "lu(3) ceiling oracle");
  const auto s22 = sl_degree_bound(SystemShape({2, 2}));
  c.require(s22.beta == 98304, "sl(2,2) = " + rational_to_string(s22.beta));
  c.require(rational_to_string(s22.beta) == big_str(oracle::sl_bound_formula({2, 2})),
            "sl(2,2) oracle");
}

void criterion7(Check& c) {
  for (const auto& dims : std::vector<std::vector<unsigned>>{{2, 2}, {2, 2, 2}}) {
    const SystemShape s(dims);
    for (unsigned m = 1; m <= 3; ++m) {
      const auto polys = luip_space(s, m).polys();
      const auto r = numeric_invariance_check(polys, s, {100, 20, 100 + m, 1e-9, Group::Lu});
      c.require(r.passed, "LU " + s.to_string() + " m=" + std::to_string(m));
    }
  }
  for (const auto& [dims, k] : std::vector<std::pair<std::vector<unsigned>, unsigned>>{
           {{2, 2}, 2}, {{2, 2}, 4}, {{2, 2, 2}, 4}}) {
    const SystemShape s(dims);
    const auto polys = slip_space(s, k).polys();
    const auto r = numeric_invariance_check(polys, s, {100, 20, 200 + k, 1e-9, Group::Sl});
    c.require(r.passed, "SL " + s.to_string() + " k=" + std::to_string(k));
  }
}

void criterion8(Check& c) {
  const auto t0 = Clock::now();
  const SystemShape s({2, 2});
  auto st = [&](std::vector<long> a) {
    std::vector<Scalar> v(a.begin(), a.end());
    return StateVector::exact(s, std::move(v));
  };
  // (a, b, Schmidt spectra equal?)
  struct Pair {
    StateVector a, b;
    bool same_spectrum;
  };
  const std::vector<Pair> pairs{
      {st({1, 0, 0, 1}), st({0, 1, 1, 0}), true},
      {st({1, 0, 0, 2}), st({0, 2, 1, 0}), true},
      {st({1, 0, 0, 0}), st({1, 1, 1, 1}), true},
      {st({1, 0, 0, 1}), st({1, 0, 0, 2}), false},
      {st({1, 0, 0, 1}), st({1, 0, 0, 0}), false},
      {st({3, 0, 0, 1}), st({1, 1, 0, 1}), false},
  };
  const auto b1 = lu_bases(s, 2);
  const auto b2 = lu_bases(SystemShape({4, 4}), 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const auto v1 = compare_lu(b1, p.a, p.b, Mode::Exact);
    const auto v2 = compare_lu(b2, tensor_power(p.a, 2), tensor_power(p.b, 2), Mode::Exact);
    const auto want =
        p.same_spectrum ? VerdictKind::IndistinguishableUpToDegree : VerdictKind::Distinguished;
    c.require(v1.kind == v2.kind, "pair " + std::to_string(i) + ": verdicts differ");
    c.require(v1.kind == want, "pair " + std::to_string(i) + ": unexpected verdict");
  }
  const double dt = seconds_since(t0);
  c.require(dt < 300.0, "took " + std::to_string(dt) + " s");
}

void criterion9(Check& c) {
  const KrausChannel id(2, 2, {Eigen::MatrixXcd::Identity(2, 2)});
  const auto conj = id.conjugated(haar_unitary(2, 31), haar_unitary(2, 32));
  c.require(channel_compare(id, conj, 2, {1e-9, 1e-12}).kind ==
                VerdictKind::IndistinguishableUpToDegree,
            "identity vs conjugated identity distinguished");
  std::vector<Eigen::MatrixXcd> ops(4, Eigen::MatrixXcd::Zero(2, 2));
  ops[0] << 1, 0, 0, 1;
  ops[1] << 0, 1, 1, 0;
  ops[2] << 0, Complex(0, -1), Complex(0, 1), 0;
  ops[3] << 1, 0, 0, -1;
  for (auto& o : ops) o /= 2.0;
  const auto v = channel_compare(id, KrausChannel(2, 2, ops), 2, {1e-9, 1e-12});
  c.require(v.kind == VerdictKind::Distinguished && v.degree <= 2,
            "identity vs depolarizing not distinguished at M <= 2");
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  status = pclose(f);
  return out;
}

void criterion10(Check& c) {
  const std::string base = std::string(INVFORGE_CLI_PATH) + " lu-basis --shape 2,2,2 --half-degree 2";
  std::string reference;
  for (const char* w : {"1", "1", "2", "8", "2", "8"}) {
    int status = 0;
    const auto out = run_capture(base + " --workers " + w, status);
    c.require(status == 0, std::string("exit status with --workers ") + w);
    c.require(!out.empty(), "empty output");
    if (reference.empty()) reference = out;
    c.require(out == reference, std::string("output differs with --workers ") + w);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"degree-2 LU spaces", criterion1},
      {"degree-4 LU spaces vs float oracle", criterion2},
      {"degree-6 LU space for (2,2,2)", criterion3},
      {"GHZ/W separation", criterion4},
      {"SLIP checks", criterion5},
      {"degree bounds", criterion6},
      {"invariance suite", criterion7},
      {"tensor-power desk property", criterion8},
      {"channel equivalence", criterion9},
      {"CLI determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
              << criteria[i].first << " (" << dt << " s)";
    if (!c.ok) std::cout << " -- " << c.why.str();
    std::cout << std::endl;
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
