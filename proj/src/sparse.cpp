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

#include "invforge/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "echelon.hpp"
#include "invforge/errors.hpp"

namespace invforge {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::from_entries(Index ambient_dim, std::vector<SparseEntry> entries) {
  SparseVector v(ambient_dim);
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  for (auto& e : entries) {
    if (e.col >= ambient_dim) {
      throw DimensionMismatch("column " + std::to_string(e.col) + " outside ambient dimension " +
                              std::to_string(ambient_dim));
    }
    if (!v.entries_.empty() && v.entries_.back().col == e.col) {
      v.entries_.back().value += e.value;
      if (v.entries_.back().value.is_zero()) v.entries_.pop_back();
    } else if (!e.value.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVector SparseVector::unit(Index ambient_dim, Index col) {
  return from_entries(ambient_dim, {{col, Scalar(1)}});
}

Scalar SparseVector::at(Index col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                             [](const SparseEntry& e, Index c) { return e.col < c; });
  if (it != entries_.end() && it->col == col) return it->value;
  return Scalar();
}

SparseVector& SparseVector::scale(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.value *= s;
  return *this;
}

SparseVector& SparseVector::add_scaled(const SparseVector& other, const Scalar& s) {
  if (other.ambient_dim_ != ambient_dim_) {
    throw DimensionMismatch("add_scaled: ambient " + std::to_string(ambient_dim_) + " vs " +
                            std::to_string(other.ambient_dim_));
  }
  if (s.is_zero() || other.is_zero()) return *this;
  std::vector<SparseEntry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->col < b->col)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->col < a->col) {
      merged.push_back({b->col, b->value * s});
      ++b;
    } else {
      Scalar v = a->value + b->value * s;
      if (!v.is_zero()) merged.push_back({a->col, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

// ---------------------------------------------------------------------------
// ResourceGuard

ResourceGuard ResourceGuard::from_env() {
  ResourceGuard g;
  if (const char* env = std::getenv("INVFORGE_MAX_AMBIENT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) g.max_ambient = v;
  }
  return g;
}

void ResourceGuard::check_ambient(Index ambient, std::string_view what) const {
  if (ambient > max_ambient) {
    throw ResourceLimit(std::string(what) + ": ambient dimension " + std::to_string(ambient) +
                        " exceeds cap " + std::to_string(max_ambient) +
                        " (raise INVFORGE_MAX_AMBIENT to allow it)");
  }
}

void ResourceGuard::check_rows(std::size_t rows, std::string_view what) const {
  if (rows > max_rows) {
    throw ResourceLimit(std::string(what) + ": " + std::to_string(rows) +
                        " generated rows exceed cap " + std::to_string(max_rows));
  }
}

// ---------------------------------------------------------------------------
// Fraction-free echelon

namespace detail {
namespace {

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& e : row.entries) {
    if (sgn(e.re) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.re.get_mpz_t());
    if (g == 1) break;
    if (sgn(e.im) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.im.get_mpz_t());
    if (g == 1) break;
  }
  // Fix the sign so the lead has positive real part (or positive imaginary
  // part when the real part vanishes).
  const auto& lead = row.entries.front();
  bool negate = sgn(lead.re) < 0 || (sgn(lead.re) == 0 && sgn(lead.im) < 0);
  if (g == 1 && !negate) return;
  if (negate) g = -g;
  for (auto& e : row.entries) {
    mpz_divexact(e.re.get_mpz_t(), e.re.get_mpz_t(), g.get_mpz_t());
    if (sgn(e.im) != 0) mpz_divexact(e.im.get_mpz_t(), e.im.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- p*row - a*pivot where p = lead(pivot), a = lead(row); the leading
// column cancels by construction.
void eliminate_lead(IntRow& row, const IntRow& pivot) {
  const GaussEntry& pl = pivot.entries.front();
  const GaussEntry& rl = row.entries.front();
  const bool real = row.real && pivot.real;

  mpz_class pr = pl.re, pi = pl.im, ar = rl.re, ai = rl.im;
  {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), pr.get_mpz_t(), ar.get_mpz_t());
    if (!real) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pi.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ai.get_mpz_t());
    }
    if (g > 1) {
      mpz_divexact(pr.get_mpz_t(), pr.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(ar.get_mpz_t(), ar.get_mpz_t(), g.get_mpz_t());
      if (!real) {
        mpz_divexact(pi.get_mpz_t(), pi.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(ai.get_mpz_t(), ai.get_mpz_t(), g.get_mpz_t());
      }
    }
  }

  std::vector<GaussEntry> out;
  out.reserve(row.entries.size() + pivot.entries.size());
  auto r = row.entries.begin() + 1;
  auto v = pivot.entries.begin() + 1;
  mpz_class t;
  while (r != row.entries.end() || v != pivot.entries.end()) {
    GaussEntry e;
    if (v == pivot.entries.end() || (r != row.entries.end() && r->col < v->col)) {
      // p * r
      e.col = r->col;
      if (real) {
        e.re = pr * r->re;
      } else {
        e.re = pr * r->re - pi * r->im;
        e.im = pr * r->im + pi * r->re;
      }
      ++r;
    } else if (r == row.entries.end() || v->col < r->col) {
      // -a * v
      e.col = v->col;
      if (real) {
        e.re = -(ar * v->re);
      } else {
        e.re = ai * v->im - ar * v->re;
        e.im = -(ar * v->im + ai * v->re);
      }
      ++v;
    } else {
      e.col = r->col;
      if (real) {
        e.re = pr * r->re;
        mpz_submul(e.re.get_mpz_t(), ar.get_mpz_t(), v->re.get_mpz_t());
      } else {
        e.re = pr * r->re - pi * r->im - ar * v->re + ai * v->im;
        e.im = pr * r->im + pi * r->re - ar * v->im - ai * v->re;
      }
      ++r;
      ++v;
    }
    if (sgn(e.re) != 0 || sgn(e.im) != 0) out.push_back(std::move(e));
  }
  row.entries = std::move(out);
  row.real = real;
  make_primitive(row);
}

Scalar lead_inverse(const GaussEntry& lead) {
  return Scalar(mpq_class(lead.re), mpq_class(lead.im)).inverse();
}

}  // namespace

IntRow to_int_row(const SparseVector& v) {
  IntRow row;
  mpz_class l = 1;
  for (const auto& e : v.entries()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.re().get_den_mpz_t());
    if (!e.value.is_real()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.im().get_den_mpz_t());
      row.real = false;
    }
  }
  row.entries.reserve(v.nnz());
  for (const auto& e : v.entries()) {
    GaussEntry g;
    g.col = e.col;
    g.re = l / e.value.re().get_den() * e.value.re().get_num();
    if (!e.value.is_real()) g.im = l / e.value.im().get_den() * e.value.im().get_num();
    row.entries.push_back(std::move(g));
  }
  make_primitive(row);
  return row;
}

SparseVector to_sparse(const IntRow& row, Index ambient) {
  std::vector<SparseEntry> out;
  out.reserve(row.entries.size());
  for (const auto& e : row.entries) {
    out.push_back({e.col, Scalar(mpq_class(e.re), mpq_class(e.im))});
  }
  return SparseVector::from_entries(ambient, std::move(out));
}

bool FractionFreeEchelon::insert(const SparseVector& v) {
  if (v.ambient_dim() != ambient_) {
    throw DimensionMismatch("rref: row ambient " + std::to_string(v.ambient_dim()) +
                            " differs from " + std::to_string(ambient_));
  }
  return insert(to_int_row(v));
}

bool FractionFreeEchelon::insert(IntRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.lead());
    if (it == pivots_.end()) {
      Index lead = row.lead();
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    eliminate_lead(row, it->second);
  }
  return false;
}

Subspace FractionFreeEchelon::finish() const {
  // Rows finalized so far, keyed by pivot column. Processing pivots from the
  // right means every row we subtract is already fully reduced.
  std::map<Index, SparseVector> done;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const IntRow& row = it->second;
    Scalar inv = lead_inverse(row.entries.front());
    std::vector<SparseEntry> acc;
    acc.reserve(row.entries.size());
    acc.push_back({row.lead(), Scalar(1)});
    for (std::size_t k = 1; k < row.entries.size(); ++k) {
      const GaussEntry& e = row.entries[k];
      Scalar value = Scalar(mpq_class(e.re), mpq_class(e.im)) * inv;
      auto d = done.find(e.col);
      if (d == done.end()) {
        acc.push_back({e.col, std::move(value)});
        continue;
      }
      const auto& other = d->second.entries();
      for (std::size_t j = 1; j < other.size(); ++j) {
        acc.push_back({other[j].col, -(value * other[j].value)});
      }
    }
    done.emplace(row.lead(), SparseVector::from_entries(ambient_, std::move(acc)));
  }
  std::vector<SparseVector> rows;
  std::vector<Index> pivots;
  rows.reserve(done.size());
  pivots.reserve(done.size());
  for (auto& [col, v] : done) {
    pivots.push_back(col);
    rows.push_back(std::move(v));
  }
  return EchelonAccess::make(ambient_, std::move(rows), std::move(pivots));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subspace

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (v.ambient_dim() != ambient_dim_) {
    throw DimensionMismatch("reduce: vector ambient " + std::to_string(v.ambient_dim()) +
                            " vs subspace ambient " + std::to_string(ambient_dim_));
  }
  if (rows_.empty() || v.is_zero()) return v;
  std::vector<SparseEntry> acc;
  bool touched = false;
  for (const auto& e : v.entries()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), e.col);
    if (it == pivots_.end() || *it != e.col) {
      acc.push_back(e);
      continue;
    }
    touched = true;
    const auto& row = rows_[static_cast<std::size_t>(it - pivots_.begin())].entries();
    for (std::size_t j = 1; j < row.size(); ++j) {
      acc.push_back({row[j].col, -(e.value * row[j].value)});
    }
  }
  if (!touched) return v;
  return SparseVector::from_entries(ambient_dim_, std::move(acc));
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) {
    throw DimensionMismatch("contains: ambient mismatch");
  }
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const SparseVector& r) { return contains(r); });
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> c;
  c.reserve(pivots_.size());
  for (Index p : pivots_) c.push_back(v.at(p));
  return c;
}

// ---------------------------------------------------------------------------
// rref / intersect / sum

Subspace rref(std::span<const SparseVector> rows, Index ambient_dim) {
  detail::FractionFreeEchelon ech(ambient_dim);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.rank() == ambient_dim) break;
  }
  return ech.finish();
}

namespace {

// a ∩ b, with b expected to be the smaller space. A combination sum c_j b_j
// lies in a exactly when sum c_j reduce_a(b_j) = 0, so the intersection is the
// image of the left kernel of the reduced rows. The kernel is read off by
// tagging each reduced row with a unit vector in extra columns past the
// ambient range.
Subspace intersect_pair(const Subspace& a, const Subspace& b) {
  const Index n = a.ambient_dim();
  if (a.dimension() == 0 || b.dimension() == 0) return Subspace(n);
  if (a.dimension() == n) return b;
  if (b.dimension() == n) return a;

  const Index tagged = n + b.dimension();
  detail::FractionFreeEchelon ech(tagged);
  for (std::size_t j = 0; j < b.dimension(); ++j) {
    SparseVector r = a.reduce(b.rows()[j]);
    std::vector<SparseEntry> entries = r.entries();
    entries.push_back({n + j, Scalar(1)});
    ech.insert(SparseVector::from_entries(tagged, std::move(entries)));
  }

  std::vector<SparseVector> common;
  for (auto it = ech.pivot_rows().lower_bound(n); it != ech.pivot_rows().end(); ++it) {
    SparseVector combo(n);
    for (const auto& e : it->second.entries) {
      const std::size_t j = static_cast<std::size_t>(e.col - n);
      combo.add_scaled(b.rows()[j], Scalar(mpq_class(e.re), mpq_class(e.im)));
    }
    common.push_back(std::move(combo));
  }
  return rref(common, n);
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("intersect: ambient " + std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()));
  }
  return a.dimension() >= b.dimension() ? intersect_pair(a, b) : intersect_pair(b, a);
}

Subspace intersect(std::span<const Subspace> spaces) {
  if (spaces.empty()) throw InvalidArgument("intersect: need at least one space");
  const Index n = spaces.front().ambient_dim();
  std::vector<const Subspace*> order;
  order.reserve(spaces.size());
  for (const auto& s : spaces) {
    if (s.ambient_dim() != n) {
      throw DimensionMismatch("intersect: ambient " + std::to_string(s.ambient_dim()) + " vs " +
                              std::to_string(n));
    }
    order.push_back(&s);
  }
  std::stable_sort(order.begin(), order.end(), [](const Subspace* x, const Subspace* y) {
    return x->dimension() < y->dimension();
  });
  Subspace acc = *order.front();
  for (std::size_t k = 1; k < order.size() && acc.dimension() > 0; ++k) {
    acc = intersect_pair(*order[k], acc);
  }
  return acc;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient mismatch");
  std::vector<SparseVector> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return rref(rows, a.ambient_dim());
}

// ---------------------------------------------------------------------------
// product spans

std::vector<SparseVector> parallel_generate(std::size_t count, std::size_t workers,
                                            const std::function<SparseVector(std::size_t)>& fn) {
  std::vector<SparseVector> out(count);
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Subspace product_span(std::span<const SparseVector> a_gens, std::span<const SparseVector> b_gens,
                      Index target_ambient, const BilinearProduct& mul,
                      const ProductSpanOptions& options) {
  options.compute.guard.check_ambient(target_ambient, "product_span");
  const bool same = options.commutative && std::equal(a_gens.begin(), a_gens.end(),
                                                      b_gens.begin(), b_gens.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t na = a_gens.size(), nb = b_gens.size();
  const std::size_t total = same ? na * (na + 1) / 2 : na * nb;
  options.compute.guard.check_rows(total, "product_span");
  pairs.reserve(total);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = same ? i : 0; j < nb; ++j) pairs.emplace_back(i, j);
  }
  auto products = parallel_generate(pairs.size(), options.compute.workers, [&](std::size_t k) {
    SparseVector p = mul(a_gens[pairs[k].first], b_gens[pairs[k].second]);
    if (p.ambient_dim() != target_ambient) {
      throw DimensionMismatch("product_span: product ambient " + std::to_string(p.ambient_dim()) +
                              " differs from target " + std::to_string(target_ambient));
    }
    return p;
  });
  return rref(products, target_ambient);
}

Subspace product_span(const Subspace& a, const Subspace& b, Index target_ambient,
                      const BilinearProduct& mul, const ProductSpanOptions& options) {
  return product_span(a.rows(), b.rows(), target_ambient, mul, options);
}

}  // namespace invforge
