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

#include "invforge/poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

std::vector<std::uint32_t> merge_sorted(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

std::string bidegree_str(Bidegree b) {
  return "(" + std::to_string(b.p) + "," + std::to_string(b.q) + ")";
}

}  // namespace

void BiMonomial::canonicalize() {
  std::sort(xs.begin(), xs.end());
  std::sort(xbars.begin(), xbars.end());
}

BiMonomial multiply(const BiMonomial& a, const BiMonomial& b) {
  return {merge_sorted(a.xs, b.xs), merge_sorted(a.xbars, b.xbars)};
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly SparsePoly::monomial(const SystemShape& shape, BiMonomial m, const Scalar& coeff) {
  SparsePoly p(shape, m.bidegree());
  p.add_term(std::move(m), coeff);
  return p;
}

void SparsePoly::add_term(BiMonomial m, const Scalar& c) {
  m.canonicalize();
  if (!(m.bidegree() == bidegree_)) {
    throw DimensionMismatch("monomial of bidegree " + bidegree_str(m.bidegree()) +
                            " added to polynomial of bidegree " + bidegree_str(bidegree_));
  }
  const std::uint64_t d = shape_.total_dim();
  for (auto i : m.xs) {
    if (i >= d) throw DimensionMismatch("monomial index out of range");
  }
  for (auto i : m.xbars) {
    if (i >= d) throw DimensionMismatch("monomial index out of range");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SparsePoly::coefficient(const BiMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void SparsePoly::check_compatible(const SparsePoly& o, const char* what) const {
  if (!(shape_ == o.shape_)) {
    throw DimensionMismatch(std::string(what) + ": shape " + shape_.to_string() + " vs " +
                            o.shape_.to_string());
  }
  if (!(bidegree_ == o.bidegree_)) {
    throw DimensionMismatch(std::string(what) + ": bidegree " + bidegree_str(bidegree_) +
                            " vs " + bidegree_str(o.bidegree_));
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_compatible(o, "poly add");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_compatible(o, "poly subtract");
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SparsePoly& SparsePoly::scale(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Scalar SparsePoly::evaluate(std::span<const Scalar> amplitudes) const {
  if (amplitudes.size() != shape_.total_dim()) {
    throw DimensionMismatch("evaluate: state length differs from shape dimension");
  }
  std::vector<Scalar> conj(amplitudes.size());
  std::vector<bool> have_conj(amplitudes.size(), false);
  Scalar total;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (auto i : m.xs) {
      t *= amplitudes[i];
      if (t.is_zero()) break;
    }
    if (t.is_zero()) continue;
    for (auto i : m.xbars) {
      if (!have_conj[i]) {
        conj[i] = amplitudes[i].conj();
        have_conj[i] = true;
      }
      t *= conj[i];
      if (t.is_zero()) break;
    }
    total += t;
  }
  return total;
}

std::complex<double> SparsePoly::evaluate(std::span<const std::complex<double>> amplitudes) const {
  if (amplitudes.size() != shape_.total_dim()) {
    throw DimensionMismatch("evaluate: state length differs from shape dimension");
  }
  return FloatPoly(*this).evaluate(amplitudes);
}

SparsePoly mul_poly(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.shape() == b.shape())) {
    throw DimensionMismatch("mul_poly: shape " + a.shape().to_string() + " vs " +
                            b.shape().to_string());
  }
  SparsePoly out(a.shape(), a.bidegree() + b.bidegree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(multiply(ma, mb), ca * cb);
  }
  return out;
}

SparsePoly pow_poly(const SparsePoly& a, unsigned n) {
  SparsePoly out = SparsePoly::one(a.shape());
  for (unsigned k = 0; k < n; ++k) out = mul_poly(out, a);
  return out;
}

SparsePoly conjugate_poly(const SparsePoly& p) {
  Bidegree b = p.bidegree();
  SparsePoly out(p.shape(), {b.q, b.p});
  for (const auto& [m, c] : p.terms()) out.add_term({m.xbars, m.xs}, c.conj());
  return out;
}

// ---------------------------------------------------------------------------
// FloatPoly

FloatPoly::FloatPoly(const SparsePoly& p) : bidegree_(p.bidegree()) {
  const std::size_t width = bidegree_.p + bidegree_.q;
  factors_.reserve(width * p.size());
  coeffs_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    factors_.insert(factors_.end(), m.xs.begin(), m.xs.end());
    factors_.insert(factors_.end(), m.xbars.begin(), m.xbars.end());
    coeffs_.push_back(c.to_complex());
  }
}

std::complex<double> FloatPoly::evaluate(std::span<const std::complex<double>> amplitudes) const {
  std::vector<std::complex<double>> conj(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) conj[i] = std::conj(amplitudes[i]);
  return evaluate(amplitudes, conj);
}

std::complex<double> FloatPoly::evaluate(std::span<const std::complex<double>> amplitudes,
                                         std::span<const std::complex<double>> conjugates) const {
  const std::size_t p = bidegree_.p, width = bidegree_.p + bidegree_.q;
  std::complex<double> total = 0;
  const std::uint32_t* f = factors_.data();
  for (const auto& c : coeffs_) {
    std::complex<double> t = c;
    for (std::size_t k = 0; k < p; ++k) t *= amplitudes[f[k]];
    for (std::size_t k = p; k < width; ++k) t *= conjugates[f[k]];
    total += t;
    f += width;
  }
  return total;
}

// ---------------------------------------------------------------------------
// DegreeDescriptor

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
}

DegreeDescriptor::DegreeDescriptor(SystemShape shape, Bidegree bidegree,
                                   const ResourceGuard& guard)
    : shape_(std::move(shape)), bidegree_(bidegree) {
  const unsigned maxdeg = std::max(bidegree_.p, bidegree_.q);
  const std::uint64_t nmax = shape_.total_dim() + maxdeg + 1;
  binom_.assign(nmax + 1, std::vector<std::uint64_t>(maxdeg + 2, 0));
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    binom_[n][0] = 1;
    for (unsigned k = 1; k <= maxdeg + 1 && k <= n; ++k) {
      const std::uint64_t a = binom_[n - 1][k - 1], b = binom_[n - 1][k];
      binom_[n][k] = (a == kSaturated || b == kSaturated || a > kSaturated - b) ? kSaturated
                                                                                : a + b;
    }
  }
  const std::uint64_t nx = multisets(shape_.total_dim(), bidegree_.p);
  const std::uint64_t nxb = multisets(shape_.total_dim(), bidegree_.q);
  const unsigned __int128 total = static_cast<unsigned __int128>(nx) * nxb;
  if (nx == kSaturated || nxb == kSaturated || total > kSaturated) {
    throw ResourceLimit("ambient dimension overflows 64 bits for shape " + shape_.to_string());
  }
  ambient_ = static_cast<Index>(total);
  xbar_count_ = nxb;
  guard.check_ambient(ambient_, "degree descriptor " + shape_.to_string() + " " +
                                    bidegree_str(bidegree_));
}

std::uint64_t DegreeDescriptor::multisets(std::uint64_t alphabet, unsigned size) const {
  if (size == 0) return 1;
  if (alphabet == 0) return 0;
  return binom_[alphabet + size - 1][size];
}

Index DegreeDescriptor::rank(std::span<const std::uint32_t> s, unsigned size) const {
  // Multisets of `r` elements drawn from [v, D) number C(D - v + r - 1, r);
  // summing that over v in [lo, hi) telescopes (hockey stick) to a
  // difference of two binomials.
  const std::uint64_t d = shape_.total_dim();
  Index r = 0;
  std::uint64_t lo = 0;
  for (unsigned t = 0; t < size; ++t) {
    const unsigned rest = size - t - 1;
    const std::uint64_t hi = s[t];
    r += binom_[d - lo + rest][rest + 1] - binom_[d - hi + rest][rest + 1];
    lo = hi;
  }
  return r;
}

std::vector<std::uint32_t> DegreeDescriptor::unrank(Index r, unsigned size) const {
  const std::uint64_t d = shape_.total_dim();
  std::vector<std::uint32_t> s(size);
  std::uint64_t v = 0;
  for (unsigned t = 0; t < size; ++t) {
    const unsigned rest = size - t - 1;
    while (true) {
      const std::uint64_t block = multisets(d - v, rest);
      if (r < block) break;
      r -= block;
      ++v;
    }
    s[t] = static_cast<std::uint32_t>(v);
  }
  return s;
}

Index DegreeDescriptor::index_of(const BiMonomial& m) const {
  if (!(m.bidegree() == bidegree_)) {
    throw DimensionMismatch("index_of: monomial bidegree " + bidegree_str(m.bidegree()) +
                            " vs descriptor " + bidegree_str(bidegree_));
  }
  return rank(m.xs, bidegree_.p) * xbar_count_ + rank(m.xbars, bidegree_.q);
}

BiMonomial DegreeDescriptor::monomial_at(Index index) const {
  if (index >= ambient_) throw DimensionMismatch("monomial_at: index out of range");
  return {unrank(index / xbar_count_, bidegree_.p), unrank(index % xbar_count_, bidegree_.q)};
}

SparseVector DegreeDescriptor::to_coeff_vector(const SparsePoly& p) const {
  if (!(p.shape() == shape_) || !(p.bidegree() == bidegree_)) {
    throw DimensionMismatch("to_coeff_vector: polynomial " + p.shape().to_string() + " " +
                            bidegree_str(p.bidegree()) + " vs descriptor " +
                            shape_.to_string() + " " + bidegree_str(bidegree_));
  }
  std::vector<SparseEntry> entries;
  entries.reserve(p.size());
  for (const auto& [m, c] : p.terms()) entries.push_back({index_of(m), c});
  return SparseVector::from_entries(ambient_, std::move(entries));
}

SparsePoly DegreeDescriptor::from_coeff_vector(const SparseVector& v) const {
  if (v.ambient_dim() != ambient_) {
    throw DimensionMismatch("from_coeff_vector: ambient mismatch");
  }
  SparsePoly p(shape_, bidegree_);
  for (const auto& e : v.entries()) p.add_term(monomial_at(e.col), e.value);
  return p;
}

// ---------------------------------------------------------------------------
// PolySubspace

PolySubspace::PolySubspace(DegreeDescriptor dd, Subspace space)
    : dd_(std::move(dd)), space_(std::move(space)) {
  if (space_.ambient_dim() != dd_.ambient_dim()) {
    throw DimensionMismatch("PolySubspace: subspace ambient differs from descriptor");
  }
}

PolySubspace PolySubspace::span(const DegreeDescriptor& dd, std::span<const SparsePoly> polys) {
  std::vector<SparseVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(dd.to_coeff_vector(p));
  return PolySubspace(dd, rref(rows, dd.ambient_dim()));
}

std::vector<SparsePoly> PolySubspace::polys() const {
  std::vector<SparsePoly> out;
  out.reserve(space_.dimension());
  for (const auto& r : space_.rows()) out.push_back(dd_.from_coeff_vector(r));
  return out;
}

bool PolySubspace::contains(const SparsePoly& p) const {
  return space_.contains(dd_.to_coeff_vector(p));
}

std::optional<std::vector<Scalar>> PolySubspace::coordinates(const SparsePoly& p) const {
  return space_.coordinates(dd_.to_coeff_vector(p));
}

// ---------------------------------------------------------------------------
// spans of products

std::vector<std::vector<std::uint32_t>> multisets_of(std::size_t count, unsigned m) {
  std::vector<std::vector<std::uint32_t>> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (count == 0) return out;
  std::vector<std::uint32_t> cur(m, 0);
  while (true) {
    out.push_back(cur);
    // Advance to the next non-decreasing sequence.
    std::size_t k = m;
    while (k > 0 && cur[k - 1] + 1 == count) --k;
    if (k == 0) break;
    const std::uint32_t v = cur[k - 1] + 1;
    for (std::size_t j = k - 1; j < m; ++j) cur[j] = v;
  }
  return out;
}

PolySubspace power_span(const SystemShape& shape, Bidegree generator_bidegree,
                        std::span<const SparsePoly> generators, unsigned m,
                        const ComputeOptions& options) {
  const Bidegree target{generator_bidegree.p * m, generator_bidegree.q * m};
  DegreeDescriptor dd(shape, target, options.guard);
  for (const auto& g : generators) {
    if (!(g.shape() == shape) || !(g.bidegree() == generator_bidegree)) {
      throw DimensionMismatch("power_span: generator does not match the declared shape/bidegree");
    }
  }
  // Binomial count first so an oversized request fails before allocating.
  {
    long double count = 1;
    for (unsigned k = 1; k <= m; ++k) {
      count = count * static_cast<long double>(generators.size() + k - 1) / k;
    }
    if (count > static_cast<long double>(options.guard.max_rows)) {
      options.guard.check_rows(std::numeric_limits<std::size_t>::max(), "power_span");
    }
  }
  const auto tuples = multisets_of(generators.size(), m);
  options.guard.check_rows(tuples.size(), "power_span");
  auto rows = parallel_generate(tuples.size(), options.workers, [&](std::size_t k) {
    SparsePoly prod = SparsePoly::one(shape);
    for (auto g : tuples[k]) prod = mul_poly(prod, generators[g]);
    return dd.to_coeff_vector(prod);
  });
  return PolySubspace(dd, rref(rows, dd.ambient_dim()));
}

PolySubspace poly_product_span(const PolySubspace& a, const PolySubspace& b, bool commutative,
                               const ComputeOptions& options) {
  const DegreeDescriptor& da = a.descriptor();
  const DegreeDescriptor& db = b.descriptor();
  if (!(da.shape() == db.shape())) throw DimensionMismatch("poly_product_span: shape mismatch");
  DegreeDescriptor target(da.shape(), da.bidegree() + db.bidegree(), options.guard);
  BilinearProduct mul = [&](const SparseVector& x, const SparseVector& y) {
    return target.to_coeff_vector(mul_poly(da.from_coeff_vector(x), db.from_coeff_vector(y)));
  };
  ProductSpanOptions po;
  po.commutative = commutative;
  po.compute = options;
  return PolySubspace(target, product_span(a.space(), b.space(), target.ambient_dim(), mul, po));
}

}  // namespace invforge
