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

// Independent reference computations used to check the library. Nothing
// here calls the library's elimination, intersection, product or bound
// code; only Scalar arithmetic and the data types are shared.

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "invforge/poly.hpp"
#include "invforge/scalar.hpp"
#include "invforge/shape.hpp"

namespace oracle {

using invforge::Scalar;
using Row = std::vector<Scalar>;
using Mat = std::vector<Row>;

// ---------------------------------------------------------------------------
// Dense exact linear algebra: textbook Gauss-Jordan with rational pivots.

inline Mat dense_rref(Mat rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const Scalar f = rows[o][c];
      for (std::size_t k = 0; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[o][k] -= f * rows[r][k];
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline std::size_t dense_rank(const Mat& rows) { return dense_rref(rows).size(); }

/// Zassenhaus: row-reduce [[V V]; [W 0]]; rows whose left half vanishes carry
/// a basis of V ∩ W in their right half.
inline Mat zassenhaus_intersection(const Mat& v, const Mat& w, std::size_t cols) {
  Mat block;
  for (const auto& r : v) {
    Row b(r);
    b.insert(b.end(), r.begin(), r.end());
    block.push_back(std::move(b));
  }
  for (const auto& r : w) {
    Row b(r);
    b.insert(b.end(), cols, Scalar());
    block.push_back(std::move(b));
  }
  Mat out;
  for (auto& r : dense_rref(block)) {
    if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(cols),
                    [](const Scalar& s) { return s.is_zero(); })) {
      out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(cols), r.end());
    }
  }
  return dense_rref(out);
}

inline Mat zassenhaus_intersection(const std::vector<Mat>& spaces, std::size_t cols) {
  Mat acc = dense_rref(spaces.at(0));
  for (std::size_t i = 1; i < spaces.size(); ++i) acc = zassenhaus_intersection(acc, spaces[i], cols);
  return acc;
}

// ---------------------------------------------------------------------------
// Dense polynomials: plain term maps, multiplied by brute force.

using Mono = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
using Terms = std::map<Mono, Scalar>;

inline Terms terms_of(const invforge::SparsePoly& p) {
  Terms t;
  for (const auto& [m, c] : p.terms()) t[{m.xs, m.xbars}] = c;
  return t;
}

inline Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      m.first.insert(m.first.end(), mb.first.begin(), mb.first.end());
      m.second.insert(m.second.end(), mb.second.begin(), mb.second.end());
      std::sort(m.first.begin(), m.first.end());
      std::sort(m.second.begin(), m.second.end());
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline Terms conjugate(const Terms& a) {
  Terms out;
  for (const auto& [m, c] : a) out[{m.second, m.first}] = c.conj();
  return out;
}

/// All products of `count` factors drawn (with repetition, unordered) from gens.
inline std::vector<Terms> all_products(const std::vector<Terms>& gens, unsigned count) {
  std::vector<Terms> out;
  std::vector<std::size_t> idx(count, 0);
  if (gens.empty()) return out;
  while (true) {
    Terms t{{Mono{}, Scalar(1)}};
    for (auto i : idx) t = multiply(t, gens[i]);
    out.push_back(std::move(t));
    std::size_t k = count;
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < count; ++j) idx[j] = idx[k - 1];
  }
  return out;
}

/// Assigns columns to every monomial seen in any of the families.
struct ColumnMap {
  std::map<Mono, std::size_t> index;

  void add(const std::vector<Terms>& family) {
    for (const auto& t : family)
      for (const auto& kv : t) index.emplace(kv.first, 0);
  }
  void freeze() {
    std::size_t i = 0;
    for (auto& kv : index) kv.second = i++;
  }
  Mat dense(const std::vector<Terms>& family) const {
    Mat out;
    for (const auto& t : family) {
      Row r(index.size());
      for (const auto& [m, c] : t) r[index.at(m)] = c;
      out.push_back(std::move(r));
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Density-matrix quantities computed straight from amplitudes.

/// Unnormalized reduced matrix of a single party, summing over every other
/// digit.
inline Mat reduced_matrix(const invforge::SystemShape& shape, const std::vector<Scalar>& amps,
                          std::size_t party) {
  const unsigned d = shape.dim(party);
  Mat rho(d, Row(d));
  for (std::uint64_t a = 0; a < shape.total_dim(); ++a) {
    for (std::uint64_t b = 0; b < shape.total_dim(); ++b) {
      auto da = shape.digits(a), db = shape.digits(b);
      bool same_rest = true;
      for (std::size_t p = 0; p < shape.parties(); ++p) {
        if (p != party && da[p] != db[p]) same_rest = false;
      }
      if (same_rest) rho[da[party]][db[party]] += amps[a] * amps[b].conj();
    }
  }
  return rho;
}

inline Scalar trace_square(const Mat& rho) {
  Scalar t;
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = 0; j < rho.size(); ++j) t += rho[i][j] * rho[j][i];
  return t;
}

// ---------------------------------------------------------------------------
// Permutation-contraction LU invariants.
//
// For sigma = (sigma_1..sigma_n) in S_m^n,
//   f_sigma(psi) = sum_{J^1..J^m} prod_c psi(J^c) conj(psi(K^c)),
// with K^c taking its party-i digit from J^{sigma_i(c)}. These span the
// degree-(m,m) LU invariants, so their numerical rank is an independent route
// to the dimension. sigma_1 is fixed to the identity (relabeling the
// conjugate copies absorbs it).

inline std::vector<std::vector<unsigned>> permutations(unsigned m) {
  std::vector<unsigned> p(m);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::vector<unsigned>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::size_t trace_invariant_rank(const invforge::SystemShape& shape, unsigned m,
                                        std::uint64_t seed, double tol = 1e-9) {
  using C = std::complex<double>;
  const auto perms = permutations(m);
  const std::size_t n = shape.parties();
  std::vector<std::vector<std::size_t>> sigmas{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : sigmas) {
      const std::size_t choices = i == 0 ? 1 : perms.size();
      for (std::size_t c = 0; c < choices; ++c) {
        auto t = s;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    }
    sigmas = std::move(next);
  }
  const std::uint64_t dim = shape.total_dim();
  std::vector<std::vector<unsigned>> digits(dim);
  for (std::uint64_t j = 0; j < dim; ++j) digits[j] = shape.digits(j);

  const std::size_t samples = sigmas.size() + 10;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd values(static_cast<Eigen::Index>(samples),
                          static_cast<Eigen::Index>(sigmas.size()));
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<C> psi(dim);
    double norm = 0;
    for (auto& a : psi) {
      a = C(normal(rng), normal(rng));
      norm += std::norm(a);
    }
    for (auto& a : psi) a /= std::sqrt(norm);
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      C total = 0;
      std::vector<std::uint64_t> js(m, 0);
      std::vector<unsigned> kd(n);
      while (true) {
        C term = 1;
        for (unsigned c = 0; c < m; ++c) {
          for (std::size_t i = 0; i < n; ++i) kd[i] = digits[js[perms[sigmas[k][i]][c]]][i];
          term *= psi[js[c]] * std::conj(psi[shape.flat(kd)]);
        }
        total += term;
        unsigned c = m;
        while (c > 0 && ++js[c - 1] == dim) js[--c] = 0;
        if (c == 0) break;
      }
      values(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(k)) = total;
    }
  }
  for (Eigen::Index c = 0; c < values.cols(); ++c) values.col(c).normalize();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(values);
  const auto& sv = svd.singularValues();
  std::size_t r = 0;
  while (r < static_cast<std::size_t>(sv.size()) && sv(static_cast<Eigen::Index>(r)) > tol * sv(0)) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Degree-bound formulas, evaluated with boost big integers.

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt b, unsigned e) {
  BigInt r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// (3/8) * (prod d)^(sum 2 d^2 + 2).
inline BigRational lu_bound_formula(const std::vector<unsigned>& dims) {
  BigInt prod = 1;
  unsigned e = 2;
  for (unsigned d : dims) {
    prod *= d;
    e += 2 * d * d;
  }
  return BigRational(3, 8) * BigRational(ipow(prod, e));
}

/// (3/8) * prod d * max(d)^(2n) * n^(sum 2 d^2 - 2n).
inline BigRational sl_bound_formula(const std::vector<unsigned>& dims) {
  BigInt prod = 1;
  unsigned mx = 0, sq = 0;
  const auto n = static_cast<unsigned>(dims.size());
  for (unsigned d : dims) {
    prod *= d;
    mx = std::max(mx, d);
    sq += 2 * d * d;
  }
  return BigRational(3, 8) * BigRational(prod * ipow(mx, 2 * n) * ipow(n, sq - 2 * n));
}

inline BigInt ceil_of(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt c = num / den;
  if (c * den < num) ++c;
  return c;
}

}  // namespace oracle
