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

#include "invforge/equivalence.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "invforge/errors.hpp"
#include "invforge/lu.hpp"
#include "invforge/sl.hpp"

namespace invforge {

bool Tolerance::close(Complex a, Complex b) const {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(absolute, relative * scale);
}

InvariantValue InvariantValue::from_exact(Scalar s) {
  InvariantValue v;
  v.approx = s.to_complex();
  v.exact = std::move(s);
  return v;
}

InvariantValue evaluate(const SparsePoly& p, const StateVector& state, Mode mode) {
  if (!(p.shape() == state.shape())) {
    throw DimensionMismatch("evaluate: polynomial shape " + p.shape().to_string() +
                            " differs from state shape " + state.shape().to_string());
  }
  if (mode == Mode::Exact) return InvariantValue::from_exact(p.evaluate(state.exact_amplitudes()));
  return InvariantValue::from_float(p.evaluate(std::span<const Complex>(state.amplitudes())));
}

Mode common_mode(const StateVector& a, const StateVector& b) {
  return a.is_exact() && b.is_exact() ? Mode::Exact : Mode::Float;
}

namespace {

bool same_value(const InvariantValue& a, const InvariantValue& b, Mode mode,
                const Tolerance& tol) {
  if (mode == Mode::Exact) return *a.exact == *b.exact;
  return tol.close(a.approx, b.approx);
}

bool is_zero_value(const InvariantValue& v, Mode mode, const Tolerance& tol) {
  return mode == Mode::Exact ? v.exact->is_zero() : tol.is_zero(v.approx);
}

// Values of every polynomial at `samples` seeded random states, one row per
// sample.
Eigen::MatrixXcd value_matrix(std::span<const SparsePoly> polys, const SystemShape& shape,
                              std::size_t samples, std::uint64_t seed) {
  std::vector<FloatPoly> compiled(polys.begin(), polys.end());
  std::mt19937_64 master(seed);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(polys.size()));
  std::vector<Complex> conj;
  for (std::size_t s = 0; s < samples; ++s) {
    const StateVector psi = random_state(shape, master());
    const auto& a = psi.amplitudes();
    conj.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) conj[j] = std::conj(a[j]);
    for (std::size_t c = 0; c < compiled.size(); ++c) {
      m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(c)) = compiled[c].evaluate(a, conj);
    }
  }
  return m;
}

void normalize_columns(Eigen::MatrixXcd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double n = m.col(c).norm();
    if (n > 0) m.col(c) /= n;
  }
}

// Orthonormal basis of the numerical column space.
Eigen::MatrixXcd orthonormal_range(Eigen::MatrixXcd m, double tol) {
  if (m.cols() == 0) return Eigen::MatrixXcd(m.rows(), 0);
  normalize_columns(m);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Eigen::MatrixXcd(m.rows(), 0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > tol * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of range(q1) ∩ range(q2) for orthonormal q1, q2: the
// right singular vectors of (I - q1 q1^H) q2 whose singular value (the sine
// of a principal angle) is below tol.
Eigen::MatrixXcd intersect_ranges(const Eigen::MatrixXcd& q1, const Eigen::MatrixXcd& q2,
                                  double tol) {
  if (q1.cols() == 0 || q2.cols() == 0) return Eigen::MatrixXcd(q1.rows(), 0);
  const Eigen::MatrixXcd residual = q2 - q1 * (q1.adjoint() * q2);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(residual, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<Eigen::Index> null;
  for (Eigen::Index c = 0; c < q2.cols(); ++c) {
    const double s = c < sv.size() ? sv(c) : 0.0;
    if (s <= tol) null.push_back(c);
  }
  Eigen::MatrixXcd out(q1.rows(), static_cast<Eigen::Index>(null.size()));
  for (std::size_t k = 0; k < null.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = q2 * svd.matrixV().col(null[k]);
  }
  return out;
}

std::vector<Complex> multiset_products(const Eigen::MatrixXcd& gen_values, Eigen::Index row,
                                       const std::vector<std::vector<std::uint32_t>>& sets) {
  std::vector<Complex> out(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    Complex v(1.0);
    for (auto g : sets[s]) v *= gen_values(row, static_cast<Eigen::Index>(g));
    out[s] = v;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fingerprints

std::vector<LuipBasis> lu_bases(const SystemShape& shape, unsigned max_half_degree,
                                const ComputeOptions& options) {
  std::vector<LuipBasis> out;
  for (unsigned m = 1; m <= max_half_degree; ++m) out.push_back(luip_space(shape, m, options));
  return out;
}

Fingerprint fingerprint(std::span<const LuipBasis> bases, const StateVector& state, Mode mode) {
  Fingerprint fp{state.shape(), mode, {}};
  if (mode == Mode::Exact) {
    const Scalar n2 = state.norm_squared_exact();
    if (n2.is_zero()) throw InvalidArgument("fingerprint: zero state");
    for (const auto& b : bases) {
      if (!(b.shape == state.shape())) throw DimensionMismatch("fingerprint: basis shape differs");
      const Scalar denom = n2.pow(b.degree).inverse();
      FingerprintEntry e{b.degree, {}};
      for (const auto& p : b.polys()) {
        e.values.push_back(InvariantValue::from_exact(p.evaluate(state.exact_amplitudes()) * denom));
      }
      fp.entries.push_back(std::move(e));
    }
    return fp;
  }
  const double n2 = state.norm_squared();
  if (n2 == 0.0) throw InvalidArgument("fingerprint: zero state");
  for (const auto& b : bases) {
    if (!(b.shape == state.shape())) throw DimensionMismatch("fingerprint: basis shape differs");
    const double denom = std::pow(n2, b.degree);
    FingerprintEntry e{b.degree, {}};
    for (const auto& p : b.polys()) {
      e.values.push_back(InvariantValue::from_float(
          p.evaluate(std::span<const Complex>(state.amplitudes())) / denom));
    }
    fp.entries.push_back(std::move(e));
  }
  return fp;
}

Fingerprint fingerprint(const StateVector& state, unsigned max_half_degree, Mode mode,
                        const ComputeOptions& options) {
  const auto bases = lu_bases(state.shape(), max_half_degree, options);
  return fingerprint(bases, state, mode);
}

// ---------------------------------------------------------------------------
// Verdicts

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Distinguished:
      return "Distinguished";
    case VerdictKind::IndistinguishableUpToDegree:
      return "IndistinguishableUpToDegree";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

Verdict compare_lu(std::span<const LuipBasis> bases, const StateVector& a, const StateVector& b,
                   Mode mode, const Tolerance& tol) {
  if (!(a.shape() == b.shape())) {
    throw DimensionMismatch("compare: shapes " + a.shape().to_string() + " and " +
                            b.shape().to_string() + " differ");
  }
  const Fingerprint fa = fingerprint(bases, a, mode);
  const Fingerprint fb = fingerprint(bases, b, mode);
  Verdict v;
  v.group = Group::Lu;
  v.max_degree = bases.empty() ? 0 : 2 * bases.back().degree;
  for (std::size_t e = 0; e < fa.entries.size(); ++e) {
    const auto& va = fa.entries[e].values;
    const auto& vb = fb.entries[e].values;
    for (std::size_t j = 0; j < va.size(); ++j) {
      if (!same_value(va[j], vb[j], mode, tol)) {
        v.kind = VerdictKind::Distinguished;
        v.degree = fa.entries[e].half_degree;
        v.basis_index = j;
        v.value_a = va[j];
        v.value_b = vb[j];
        return v;
      }
    }
  }
  v.kind = VerdictKind::IndistinguishableUpToDegree;
  return v;
}

Verdict compare_lu(const StateVector& a, const StateVector& b, unsigned max_half_degree,
                   Mode mode, const Tolerance& tol, const ComputeOptions& options) {
  if (!(a.shape() == b.shape())) {
    throw DimensionMismatch("compare: shapes " + a.shape().to_string() + " and " +
                            b.shape().to_string() + " differ");
  }
  const auto bases = lu_bases(a.shape(), max_half_degree, options);
  return compare_lu(bases, a, b, mode, tol);
}

std::vector<SlipBasis> slip_bases(const SystemShape& shape, std::span<const unsigned> degrees,
                                  const ComputeOptions& options) {
  std::vector<SlipBasis> out;
  for (unsigned k : degrees) out.push_back(slip_space(shape, k, options));
  return out;
}

namespace {

struct SlItem {
  unsigned weight;  // total degree p + q
  unsigned degree;  // basis degree label
  std::size_t index;
  InvariantValue a, b;
};

InvariantValue ratio(const InvariantValue& f, unsigned fe, const InvariantValue& h, unsigned he,
                     Mode mode) {
  if (mode == Mode::Exact) return InvariantValue::from_exact(f.exact->pow(fe) / h.exact->pow(he));
  return InvariantValue::from_float(std::pow(f.approx, static_cast<double>(fe)) /
                                    std::pow(h.approx, static_cast<double>(he)));
}

}  // namespace

Verdict sl_projective_compare(std::span<const InvariantBasis> bases, const StateVector& a,
                              const StateVector& b, Mode mode, const Tolerance& tol) {
  if (!(a.shape() == b.shape())) {
    throw DimensionMismatch("compare: shapes " + a.shape().to_string() + " and " +
                            b.shape().to_string() + " differ");
  }
  Verdict v;
  v.group = bases.empty() ? Group::Sl : bases.front().group;
  std::vector<SlItem> items;
  const double na = a.norm_squared(), nb = b.norm_squared();
  for (const auto& basis : bases) {
    if (basis.group != v.group) throw InvalidArgument("sl compare: bases mix groups");
    if (!(basis.shape == a.shape())) throw DimensionMismatch("sl compare: basis shape differs");
    const Bidegree bd = basis.space.descriptor().bidegree();
    const unsigned w = bd.p + bd.q;
    v.max_degree = std::max(v.max_degree, w);
    const auto polys = basis.polys();
    for (std::size_t j = 0; j < polys.size(); ++j) {
      SlItem it{w, basis.degree, j, evaluate(polys[j], a, mode), evaluate(polys[j], b, mode)};
      if (mode == Mode::Float) {
        // Scale to unit norm so the zero test and ratios are size-independent.
        it.a.approx /= std::pow(na, w / 2.0);
        it.b.approx /= std::pow(nb, w / 2.0);
      }
      items.push_back(std::move(it));
    }
  }

  const SlItem* ref = nullptr;
  for (const auto& it : items) {
    const bool za = is_zero_value(it.a, mode, tol), zb = is_zero_value(it.b, mode, tol);
    if (za != zb) {
      v.kind = VerdictKind::Distinguished;
      v.degree = it.degree;
      v.basis_index = it.index;
      v.value_a = it.a;
      v.value_b = it.b;
      return v;
    }
    if (!za && ref == nullptr) ref = &it;
  }
  if (ref == nullptr) {
    v.kind = VerdictKind::Inconclusive;
    return v;
  }
  for (const auto& it : items) {
    if (&it == ref || is_zero_value(it.a, mode, tol)) continue;
    // f^l / h^k is unchanged by psi -> lambda psi when f, h have weights k, l.
    const unsigned g = std::gcd(it.weight, ref->weight);
    const unsigned fe = ref->weight / g, he = it.weight / g;
    const InvariantValue ra = ratio(it.a, fe, ref->a, he, mode);
    const InvariantValue rb = ratio(it.b, fe, ref->b, he, mode);
    if (!same_value(ra, rb, mode, tol)) {
      v.kind = VerdictKind::Distinguished;
      v.degree = it.degree;
      v.basis_index = it.index;
      v.denominator = std::make_pair(ref->degree, ref->index);
      v.value_a = ra;
      v.value_b = rb;
      return v;
    }
  }
  v.kind = VerdictKind::IndistinguishableUpToDegree;
  return v;
}

// ---------------------------------------------------------------------------
// Numeric checks

InvarianceReport numeric_invariance_check(std::span<const SparsePoly> basis,
                                          const SystemShape& shape,
                                          const InvarianceOptions& options) {
  if (!(options.tol > 0)) throw InvalidArgument("invariance check: tol must be positive");
  for (const auto& p : basis) {
    if (!(p.shape() == shape)) throw DimensionMismatch("invariance check: basis shape differs");
  }
  InvarianceReport report;
  report.tol = options.tol;
  report.trials = options.trials;
  report.states_per_trial = options.states_per_trial;
  report.max_deviation.assign(basis.size(), 0.0);

  std::vector<FloatPoly> compiled(basis.begin(), basis.end());
  std::mt19937_64 master(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::uint64_t op_seed = master();
    LocalOperator op;
    switch (options.group) {
      case Group::Lu:
        op = random_local_unitary(shape, op_seed).as_operator();
        break;
      case Group::Sl:
        op = random_sl_operator(shape, op_seed, false);
        break;
      case Group::Slu:
        op = random_sl_operator(shape, op_seed, true);
        break;
    }
    for (std::size_t s = 0; s < options.states_per_trial; ++s) {
      const StateVector psi = random_state(shape, master());
      const StateVector moved = apply_local(op, psi);
      for (std::size_t j = 0; j < compiled.size(); ++j) {
        const Complex f0 = compiled[j].evaluate(psi.amplitudes());
        const Complex f1 = compiled[j].evaluate(moved.amplitudes());
        const double dev = std::abs(f1 - f0) / (1.0 + std::abs(f0));
        report.max_deviation[j] = std::max(report.max_deviation[j], dev);
      }
    }
  }
  for (double d : report.max_deviation) {
    if (!(d <= options.tol)) report.passed = false;
  }
  return report;
}

std::size_t float_rank_oracle(std::span<const SparsePoly> polys, const SystemShape& shape,
                              std::size_t samples, double tol, std::uint64_t seed) {
  if (samples < polys.size() + 10) {
    throw InvalidArgument("float_rank_oracle: need at least " + std::to_string(polys.size() + 10) +
                          " samples, got " + std::to_string(samples));
  }
  if (polys.empty()) return 0;
  return static_cast<std::size_t>(
      orthonormal_range(value_matrix(polys, shape, samples, seed), tol).cols());
}

std::size_t float_intersection_dim_mixed(const SystemShape& shape,
                                         const std::vector<std::vector<SparsePoly>>& generators,
                                         const std::vector<unsigned>& powers,
                                         const std::vector<bool>& conjugate_pairs, double tol,
                                         std::uint64_t seed) {
  const std::size_t parties = generators.size();
  if (parties == 0) throw InvalidArgument("float intersection: no generator lists");
  if (powers.size() != parties || (!conjugate_pairs.empty() && conjugate_pairs.size() != parties)) {
    throw DimensionMismatch("float intersection: per-party argument sizes differ");
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> sets(parties);
  std::vector<std::size_t> cols(parties);
  std::size_t total = 0;
  for (std::size_t i = 0; i < parties; ++i) {
    sets[i] = multisets_of(generators[i].size(), powers[i]);
    const bool pair = !conjugate_pairs.empty() && conjugate_pairs[i];
    cols[i] = pair ? sets[i].size() * sets[i].size() : sets[i].size();
    total += cols[i];
  }
  const std::size_t samples = total + 10;

  Eigen::MatrixXcd q;
  for (std::size_t i = 0; i < parties; ++i) {
    const bool pair = !conjugate_pairs.empty() && conjugate_pairs[i];
    // Same seed for every party: all spans are sampled at the same states.
    const Eigen::MatrixXcd g = value_matrix(generators[i], shape, samples, seed);
    Eigen::MatrixXcd vals(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(cols[i]));
    for (Eigen::Index r = 0; r < vals.rows(); ++r) {
      const auto prods = multiset_products(g, r, sets[i]);
      if (!pair) {
        for (std::size_t c = 0; c < prods.size(); ++c) vals(r, static_cast<Eigen::Index>(c)) = prods[c];
        continue;
      }
      for (std::size_t x = 0; x < prods.size(); ++x) {
        for (std::size_t y = 0; y < prods.size(); ++y) {
          vals(r, static_cast<Eigen::Index>(x * prods.size() + y)) = prods[x] * std::conj(prods[y]);
        }
      }
    }
    const Eigen::MatrixXcd range = orthonormal_range(std::move(vals), tol);
    q = i == 0 ? range : intersect_ranges(q, range, tol);
    if (q.cols() == 0) return 0;
  }
  return static_cast<std::size_t>(q.cols());
}

std::size_t float_intersection_dim(const SystemShape& shape,
                                   const std::vector<std::vector<SparsePoly>>& generators,
                                   unsigned m, double tol, std::uint64_t seed) {
  return float_intersection_dim_mixed(shape, generators,
                                      std::vector<unsigned>(generators.size(), m), {}, tol, seed);
}

// ---------------------------------------------------------------------------
// Channels

Verdict channel_compare(const KrausChannel& e, const KrausChannel& f, unsigned max_half_degree,
                        const Tolerance& tol, const ComputeOptions& options) {
  if (e.input_dim() != f.input_dim() || e.output_dim() != f.output_dim()) {
    throw DimensionMismatch("channel compare: dimensions differ");
  }
  const unsigned ancilla = e.input_dim() * e.output_dim();
  const StateVector pa = purify(choi_state(e), ancilla);
  const StateVector pb = purify(choi_state(f), ancilla);
  return compare_lu(pa, pb, max_half_degree, Mode::Float, tol, options);
}

}  // namespace invforge
