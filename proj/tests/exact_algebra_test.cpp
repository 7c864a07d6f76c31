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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "invforge/errors.hpp"
#include "invforge/lu.hpp"
#include "invforge/poly.hpp"
#include "invforge/sparse.hpp"
#include "oracles.hpp"

namespace invforge {
namespace {

SparseVector vec(std::initializer_list<long> values) {
  std::vector<SparseEntry> e;
  Index c = 0;
  for (long v : values) e.push_back({c++, Scalar(v)});
  return SparseVector::from_entries(values.size(), std::move(e));
}

std::vector<Scalar> dense(const SparseVector& v) {
  std::vector<Scalar> out(v.ambient_dim());
  for (const auto& e : v.entries()) out[e.col] = e.value;
  return out;
}

oracle::Mat dense_rows(const Subspace& s) {
  oracle::Mat out;
  for (const auto& r : s.rows()) out.push_back(dense(r));
  return out;
}

SparseVector random_vector(std::mt19937_64& rng, Index ambient, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> small(-3, 3);
  std::vector<SparseEntry> e;
  for (Index c = 0; c < ambient; ++c) {
    if (u(rng) < density) e.push_back({c, Scalar(mpq_class(small(rng), 1 + (small(rng) + 3)), small(rng))});
  }
  return SparseVector::from_entries(ambient, std::move(e));
}

std::vector<SparseVector> random_rows(std::mt19937_64& rng, std::size_t count, Index ambient) {
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(random_vector(rng, ambient, 0.4));
  // Plant dependencies so that rank < count.
  if (count >= 3) {
    SparseVector dep = rows[0];
    dep.add_scaled(rows[1], Scalar(mpq_class(-2, 3), 1));
    rows.push_back(std::move(dep));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Scalar

TEST(Scalar, CanonicalFormAndExactEquality) {
  const Scalar a(mpq_class(2, 4), mpq_class(-3, 6));
  EXPECT_EQ(a.re(), mpq_class(1, 2));
  EXPECT_EQ(a.im(), mpq_class(-1, 2));
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_EQ(a, Scalar::parse("1/2", "-1/2"));
  EXPECT_NE(a, a.conj());
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(a.norm(), mpq_class(1, 2));
}

TEST(Scalar, SerializeRoundTripIsIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> big(-1'000'000'007L, 1'000'000'007L);
  for (int t = 0; t < 200; ++t) {
    mpq_class re(big(rng), std::abs(big(rng)) + 1), im(big(rng), std::abs(big(rng)) + 1);
    re.canonicalize();
    im.canonicalize();
    const Scalar s(re, im);
    const std::string r = rational_to_string(s.re()), i = rational_to_string(s.im());
    EXPECT_NE(r.find('/'), std::string::npos);
    EXPECT_EQ(Scalar::parse(r, i), s);
  }
}

TEST(Scalar, MalformedRationalsAreRejected) {
  for (const char* bad : {"", "1/0", "1.5", "abc", "1/", "/2", "1//2", "0x10"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
  EXPECT_EQ(parse_rational("-6/4"), mpq_class(-3, 2));
  EXPECT_EQ(parse_rational("7"), mpq_class(7));
}

// ---------------------------------------------------------------------------
// rref

TEST(Rref, IdentityIsAlreadyCanonical) {
  const std::vector<SparseVector> rows{vec({1, 0}), vec({0, 1})};
  const Subspace s = rref(rows, 2);
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.rows()[0], vec({1, 0}));
  EXPECT_EQ(s.rows()[1], vec({0, 1}));
  EXPECT_EQ(s.pivots(), (std::vector<Index>{0, 1}));
}

TEST(Rref, DependentRowsCollapse) {
  const std::vector<SparseVector> rows{vec({1, 1}), vec({2, 2})};
  const Subspace s = rref(rows, 2);
  ASSERT_EQ(s.dimension(), 1u);
  EXPECT_EQ(s.rows()[0], vec({1, 1}));
}

TEST(Rref, EmptySpanIsZeroSpace) {
  const Subspace s = rref({}, 5);
  EXPECT_EQ(s.dimension(), 0u);
  EXPECT_EQ(s.ambient_dim(), 5u);
}

TEST(Rref, AmbientMismatchThrows) {
  const std::vector<SparseVector> rows{vec({1, 0}), vec({0, 1, 0})};
  EXPECT_THROW(rref(rows, 2), DimensionMismatch);
}

TEST(Rref, MatchesDenseOracleAndIsCanonical) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto rows = random_rows(rng, 2 + t % 7, 9);
    const Subspace s = rref(rows, 9);
    oracle::Mat d;
    for (const auto& r : rows) d.push_back(dense(r));
    EXPECT_EQ(dense_rows(s), oracle::dense_rref(d));
    // Pivot entries 1, pivot columns otherwise 0, pivots increasing.
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      EXPECT_EQ(s.rows()[i].at(s.pivots()[i]), Scalar(1));
      EXPECT_EQ(s.rows()[i].leading_col(), s.pivots()[i]);
      if (i > 0) {
        EXPECT_LT(s.pivots()[i - 1], s.pivots()[i]);
      }
      for (std::size_t o = 0; o < s.dimension(); ++o) {
        if (o != i) {
          EXPECT_TRUE(s.rows()[o].at(s.pivots()[i]).is_zero());
        }
      }
    }
    // Order independence and projection.
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(rref(rows, 9), s);
    EXPECT_EQ(rref(s.rows(), 9), s);
  }
}

TEST(Rref, ResourceGuardOnRowCount) {
  std::vector<SparseVector> rows(4, vec({1, 2}));
  ComputeOptions opts;
  opts.guard.max_rows = 3;
  EXPECT_THROW(opts.guard.check_rows(rows.size(), "test"), ResourceLimit);
}

// ---------------------------------------------------------------------------
// intersect

TEST(Intersect, Idempotent) {
  std::mt19937_64 rng(3);
  const Subspace v = rref(random_rows(rng, 4, 7), 7);
  EXPECT_EQ(intersect(v, v), v);
}

TEST(Intersect, ComplementaryAxes) {
  const Subspace a = rref(std::vector{vec({1, 0})}, 2);
  const Subspace b = rref(std::vector{vec({0, 1})}, 2);
  EXPECT_EQ(intersect(a, b).dimension(), 0u);
}

TEST(Intersect, CoordinatePlanesAgainstZassenhaus) {
  const Subspace a = rref(std::vector{vec({1, 0, 0}), vec({0, 1, 0})}, 3);
  const Subspace b = rref(std::vector{vec({0, 1, 0}), vec({0, 0, 1})}, 3);
  const Subspace c = intersect(a, b);
  ASSERT_EQ(c.dimension(), 1u);
  EXPECT_EQ(c.rows()[0], vec({0, 1, 0}));
  EXPECT_EQ(dense_rows(c), oracle::zassenhaus_intersection(dense_rows(a), dense_rows(b), 3));
}

TEST(Intersect, RandomInstancesAgainstZassenhausAndDimensionFormula) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const Index n = 8;
    // Shared part guarantees nontrivial intersections.
    auto shared = random_rows(rng, 2, n);
    auto ra = random_rows(rng, 1 + t % 4, n);
    auto rb = random_rows(rng, 1 + (t / 4) % 4, n);
    ra.insert(ra.end(), shared.begin(), shared.end());
    rb.insert(rb.end(), shared.begin(), shared.end());
    const Subspace v = rref(ra, n), w = rref(rb, n);
    const Subspace i = intersect(v, w);
    EXPECT_EQ(dense_rows(i), oracle::zassenhaus_intersection(dense_rows(v), dense_rows(w), n));
    EXPECT_EQ(i.dimension() + sum(v, w).dimension(), v.dimension() + w.dimension());
    EXPECT_TRUE(v.contains(i));
    EXPECT_TRUE(w.contains(i));
    EXPECT_EQ(intersect(w, v), i);
  }
}

TEST(Intersect, ManySpacesOrderIndependent) {
  std::mt19937_64 rng(23);
  const Index n = 10;
  auto shared = random_rows(rng, 2, n);
  std::vector<Subspace> spaces;
  std::vector<oracle::Mat> dense_spaces;
  for (int k = 0; k < 4; ++k) {
    auto rows = random_rows(rng, 2 + k, n);
    rows.insert(rows.end(), shared.begin(), shared.end());
    spaces.push_back(rref(rows, n));
    dense_spaces.push_back(dense_rows(spaces.back()));
  }
  const Subspace all = intersect(spaces);
  EXPECT_EQ(dense_rows(all), oracle::zassenhaus_intersection(dense_spaces, n));
  std::reverse(spaces.begin(), spaces.end());
  EXPECT_EQ(intersect(spaces), all);
  EXPECT_EQ(intersect(intersect(spaces[0], spaces[1]), intersect(spaces[2], spaces[3])), all);
  for (const auto& s : spaces) EXPECT_TRUE(s.contains(all));
}

TEST(Intersect, AmbientMismatchThrows) {
  const Subspace a = rref(std::vector{vec({1, 0})}, 2);
  const Subspace b = rref(std::vector{vec({0, 1, 0})}, 3);
  EXPECT_THROW(intersect(a, b), DimensionMismatch);
  EXPECT_THROW(intersect(std::span<const Subspace>{}), InvalidArgument);
}

TEST(Subspace, CoordinatesReconstructMembers) {
  std::mt19937_64 rng(29);
  const Subspace s = rref(random_rows(rng, 4, 7), 7);
  SparseVector v(7);
  v.add_scaled(s.rows()[0], Scalar(mpq_class(3, 5)));
  v.add_scaled(s.rows().back(), Scalar(0, -2));
  const auto c = s.coordinates(v);
  ASSERT_TRUE(c.has_value());
  SparseVector back(7);
  for (std::size_t i = 0; i < c->size(); ++i) back.add_scaled(s.rows()[i], (*c)[i]);
  EXPECT_EQ(back, v);
  ASSERT_LT(s.dimension(), 7u);
  for (Index c = 0; c < 7; ++c) {
    const auto unit = SparseVector::unit(7, c);
    EXPECT_EQ(s.coordinates(unit).has_value(), s.contains(unit));
  }
}

// ---------------------------------------------------------------------------
// product spans

TEST(ProductSpan, UnitElement) {
  const SystemShape shape({2});
  const SparsePoly p = SparsePoly::monomial(shape, {{0}, {1}}, Scalar(3)) +
                       SparsePoly::monomial(shape, {{1}, {1}}, Scalar(0, 1));
  const PolySubspace a = PolySubspace::span(DegreeDescriptor(shape, {1, 1}), std::vector{p});
  const PolySubspace one =
      PolySubspace::span(DegreeDescriptor(shape, {0, 0}), std::vector{SparsePoly::one(shape)});
  EXPECT_EQ(poly_product_span(a, one, true), a);
}

TEST(ProductSpan, CommutativeEnumerationCountsMultisets) {
  const SystemShape shape({2, 2});
  const auto u = reduced_generators(shape, 0);
  const std::vector<SparsePoly> two{u[0], u[1]};
  const PolySubspace s = power_span(shape, {1, 1}, two, 2);
  EXPECT_EQ(s.dimension(), 3u);
  EXPECT_EQ(multisets_of(2, 2).size(), 3u);
}

TEST(ProductSpan, SquaredGeneratorsMatchBruteForceExpansion) {
  const SystemShape shape({2, 2});
  const auto u = reduced_generators(shape, 0);
  const PolySubspace a = PolySubspace::span(DegreeDescriptor(shape, {1, 1}), u);
  const PolySubspace sq = poly_product_span(a, a, true);

  std::vector<oracle::Terms> gens;
  for (const auto& p : u) gens.push_back(oracle::terms_of(p));
  std::vector<oracle::Terms> products;
  for (const auto& x : gens)
    for (const auto& y : gens) products.push_back(oracle::multiply(x, y));
  oracle::ColumnMap cols;
  cols.add(products);
  cols.freeze();
  EXPECT_EQ(sq.dimension(), oracle::dense_rank(cols.dense(products)));

  // Every expanded product is in the span, and the span has nothing more.
  for (const auto& x : u)
    for (const auto& y : u) EXPECT_TRUE(sq.contains(mul_poly(x, y)));
}

TEST(ProductSpan, GenericBilinearProduct) {
  // Componentwise product on the diagonal: span{e0 + e1} x span{e1 + e2}.
  const std::vector<SparseVector> a{vec({1, 1, 0})}, b{vec({0, 1, 1})};
  BilinearProduct mul = [](const SparseVector& x, const SparseVector& y) {
    std::vector<SparseEntry> e;
    for (const auto& xe : x.entries()) {
      const Scalar v = xe.value * y.at(xe.col);
      if (!v.is_zero()) e.push_back({xe.col, v});
    }
    return SparseVector::from_entries(3, std::move(e));
  };
  const Subspace s = product_span(a, b, 3, mul);
  ASSERT_EQ(s.dimension(), 1u);
  EXPECT_EQ(s.rows()[0], vec({0, 1, 0}));
}

TEST(ProductSpan, TargetAmbientGuard) {
  const std::vector<SparseVector> a{vec({1})};
  ProductSpanOptions opts;
  opts.compute.guard.max_ambient = 10;
  BilinearProduct mul = [](const SparseVector&, const SparseVector&) { return SparseVector(100); };
  EXPECT_THROW(product_span(a, a, 100, mul, opts), ResourceLimit);
}

TEST(ProductSpan, WorkerCountDoesNotChangeOutput) {
  const SystemShape shape({2, 2, 2});
  const auto u = reduced_generators(shape, 1);
  ComputeOptions serial, parallel;
  parallel.workers = 4;
  EXPECT_EQ(power_span(shape, {1, 1}, u, 2, serial), power_span(shape, {1, 1}, u, 2, parallel));
}

TEST(ParallelGenerate, PreservesIndexOrderAndPropagatesErrors) {
  const auto out = parallel_generate(50, 4, [](std::size_t i) {
    return SparseVector::unit(64, static_cast<Index>(i));
  });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].leading_col(), i);
  EXPECT_THROW(parallel_generate(10, 3,
                                 [](std::size_t i) -> SparseVector {
                                   if (i == 7) throw InvalidArgument("boom");
                                   return SparseVector(1);
                                 }),
               InvalidArgument);
}

}  // namespace
}  // namespace invforge
