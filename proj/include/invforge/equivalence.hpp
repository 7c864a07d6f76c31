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

// Fingerprints, degree-bounded equivalence verdicts and the numeric checks
// used to cross-validate the exact machinery.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invforge/invariants.hpp"
#include "invforge/states.hpp"

namespace invforge {

/// Relative tolerance with an absolute floor:
/// |a - b| <= max(absolute, relative * max(|a|, |b|)).
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;

  bool close(Complex a, Complex b) const;
  bool is_zero(Complex a) const { return std::abs(a) <= absolute; }
};

/// An invariant value. `exact` is set only in exact mode; `approx` always.
struct InvariantValue {
  std::optional<Scalar> exact;
  Complex approx{0.0, 0.0};

  static InvariantValue from_exact(Scalar s);
  static InvariantValue from_float(Complex c) { return {std::nullopt, c}; }
};

/// Raw value p(psi). Exact mode throws ModeError on a float-only state.
InvariantValue evaluate(const SparsePoly& p, const StateVector& state, Mode mode);

/// Picks Exact when both states carry exact amplitudes, Float otherwise.
Mode common_mode(const StateVector& a, const StateVector& b);

// ---------------------------------------------------------------------------
// Fingerprints

struct FingerprintEntry {
  unsigned half_degree = 0;
  /// f(psi) / (norm^2)^m for each canonical basis element f of Q_(2m).
  std::vector<InvariantValue> values;
};

struct Fingerprint {
  SystemShape shape;
  Mode mode = Mode::Exact;
  std::vector<FingerprintEntry> entries;
};

/// Q_(2m) bases for m = 1..max_half_degree.
std::vector<LuipBasis> lu_bases(const SystemShape& shape, unsigned max_half_degree,
                                const ComputeOptions& options = {});

/// Throws InvalidArgument on the zero state.
Fingerprint fingerprint(std::span<const LuipBasis> bases, const StateVector& state, Mode mode);
Fingerprint fingerprint(const StateVector& state, unsigned max_half_degree, Mode mode,
                        const ComputeOptions& options = {});

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictKind { Distinguished, IndistinguishableUpToDegree, Inconclusive };

std::string_view verdict_name(VerdictKind k);

/// Outcome of a degree-truncated comparison. IndistinguishableUpToDegree
/// only states that no computed invariant separates the inputs.
///
/// A Distinguished verdict names its witness: the basis element
/// `basis_index` of degree `degree` (a half-degree for LU). For the SL ratio
/// test the witness may instead be the ratio against `denominator`, a
/// (degree, index) pair, in which case the values are f^l / h^k.
struct Verdict {
  VerdictKind kind = VerdictKind::IndistinguishableUpToDegree;
  Group group = Group::Lu;
  unsigned degree = 0;
  std::size_t basis_index = 0;
  std::optional<std::pair<unsigned, std::size_t>> denominator;
  InvariantValue value_a;
  InvariantValue value_b;
  /// Total polynomial degree covered by the comparison (2M for LU).
  unsigned max_degree = 0;
};

/// Exact when `mode` is Exact, otherwise within `tol`. Throws
/// DimensionMismatch on different shapes.
Verdict compare_lu(std::span<const LuipBasis> bases, const StateVector& a, const StateVector& b,
                   Mode mode, const Tolerance& tol = {});
Verdict compare_lu(const StateVector& a, const StateVector& b, unsigned max_half_degree,
                   Mode mode, const Tolerance& tol = {}, const ComputeOptions& options = {});

/// Projective comparison on homogeneous SL (or SLU) invariants, possibly of
/// several degrees. A state's invariant values are compared through their
/// zero pattern and through the scale-free ratios f^l / h^k against one
/// reference invariant h that is nonzero on both. Agreement is only a
/// necessary condition for SLOCC equivalence. Inconclusive when every value
/// vanishes on both states.
Verdict sl_projective_compare(std::span<const InvariantBasis> bases, const StateVector& a,
                              const StateVector& b, Mode mode, const Tolerance& tol = {});
/// SLIP bases at each listed degree.
std::vector<SlipBasis> slip_bases(const SystemShape& shape, std::span<const unsigned> degrees,
                                  const ComputeOptions& options = {});

// ---------------------------------------------------------------------------
// Numeric checks

struct InvarianceOptions {
  std::size_t trials = 100;
  /// Random states evaluated per group element.
  std::size_t states_per_trial = 1;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  /// Lu: Haar local unitaries. Sl: determinant-one factors. Slu: determinant
  /// one factors with a Haar unitary on the last party.
  Group group = Group::Lu;
};

struct InvarianceReport {
  bool passed = true;
  double tol = 0;
  std::size_t trials = 0;
  std::size_t states_per_trial = 0;
  /// Per basis element, max of |f(g psi) - f(psi)| / (1 + |f(psi)|).
  std::vector<double> max_deviation;
};

InvarianceReport numeric_invariance_check(std::span<const SparsePoly> basis,
                                          const SystemShape& shape,
                                          const InvarianceOptions& options = {});

/// Numerical rank of the (samples x polys) matrix of values at seeded random
/// states: singular values above tol * largest, after scaling each column to
/// unit norm. Throws InvalidArgument unless samples >= polys.size() + 10.
std::size_t float_rank_oracle(std::span<const SparsePoly> polys, const SystemShape& shape,
                              std::size_t samples, double tol = 1e-8, std::uint64_t seed = 1);

/// Float estimate of dim of the intersection over parties of span{m-fold
/// products of generators[i]}. Each party's span is represented by its values
/// at shared random states (products are evaluated from generator values,
/// never expanded); the spans are then intersected through principal angles.
std::size_t float_intersection_dim(const SystemShape& shape,
                                   const std::vector<std::vector<SparsePoly>>& generators,
                                   unsigned m, double tol = 1e-8, std::uint64_t seed = 1);

/// Same, for the holomorphic-times-antiholomorphic spans used by SLU
/// invariants: per party, span{ a * conj(b) } with a, b running over m-fold
/// products of generators[i]. An empty `conjugate` flag vector means false
/// for every party.
std::size_t float_intersection_dim_mixed(const SystemShape& shape,
                                         const std::vector<std::vector<SparsePoly>>& generators,
                                         const std::vector<unsigned>& powers,
                                         const std::vector<bool>& conjugate_pairs,
                                         double tol = 1e-8, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Channels

/// Choi states of both channels, purified with ancilla input*output, compared
/// by compare_lu on shape (input, output, input*output) in float mode.
/// Throws DimensionMismatch when the channels' dimensions differ.
Verdict channel_compare(const KrausChannel& e, const KrausChannel& f, unsigned max_half_degree,
                        const Tolerance& tol = {}, const ComputeOptions& options = {});

}  // namespace invforge
