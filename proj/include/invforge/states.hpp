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

// States, density matrices, channels and local operators: the objects
// invariants get evaluated on.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invforge/scalar.hpp"
#include "invforge/shape.hpp"
#include "invforge/sparse.hpp"

namespace invforge {

using Complex = std::complex<double>;

enum class Mode { Exact, Float };

/// Pure state in the computational basis. An exact state keeps Q(i)
/// amplitudes and a double copy of them; a float state only the latter.
/// Exact states are usually left unnormalized.
class StateVector {
 public:
  StateVector() = default;
  static StateVector exact(SystemShape shape, std::vector<Scalar> amplitudes);
  static StateVector from_float(SystemShape shape, std::vector<Complex> amplitudes);

  const SystemShape& shape() const { return shape_; }
  Mode mode() const { return exact_ ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return exact_.has_value(); }

  /// Throws ModeError on a float state.
  const std::vector<Scalar>& exact_amplitudes() const;
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm_squared() const;
  /// Throws ModeError on a float state.
  Scalar norm_squared_exact() const;
  /// Informational: |<psi|psi> - 1| below 1e-12 (exactly 1 for exact states).
  bool normalized() const;

  /// lambda * psi; stays exact when both are exact.
  StateVector scaled(const Scalar& lambda) const;
  /// Float copy scaled to unit norm.
  StateVector normalized_float() const;

 private:
  SystemShape shape_;
  std::optional<std::vector<Scalar>> exact_;
  std::vector<Complex> amps_;
};

/// Hermitian operator on the retained parties, row-major over their flat
/// index.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// Throws InvalidArgument unless entry(a,b) == conj(entry(b,a)) exactly.
  static DensityMatrix exact(SystemShape shape, std::vector<Scalar> entries);
  /// Throws InvalidArgument unless Hermitian within 1e-9.
  static DensityMatrix from_float(SystemShape shape, Eigen::MatrixXcd matrix);

  const SystemShape& shape() const { return shape_; }
  Mode mode() const { return exact_ ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return exact_.has_value(); }
  std::uint64_t dim() const { return shape_.total_dim(); }

  const Eigen::MatrixXcd& matrix() const { return m_; }
  /// Throws ModeError on a float matrix.
  const std::vector<Scalar>& exact_entries() const;
  const Scalar& entry(std::uint64_t row, std::uint64_t col) const;

  Complex trace() const { return m_.trace(); }
  Scalar trace_exact() const;

 private:
  SystemShape shape_;
  std::optional<std::vector<Scalar>> exact_;
  Eigen::MatrixXcd m_;
};

/// E(rho) = sum_i E_i rho E_i^dagger, each E_i output_dim x input_dim.
class KrausChannel {
 public:
  KrausChannel() = default;
  KrausChannel(unsigned input_dim, unsigned output_dim, std::vector<Eigen::MatrixXcd> ops);

  unsigned input_dim() const { return input_dim_; }
  unsigned output_dim() const { return output_dim_; }
  const std::vector<Eigen::MatrixXcd>& kraus_ops() const { return ops_; }

  /// sum E_i^dagger E_i == I within tol (max-abs entry).
  bool is_trace_preserving(double tol = 1e-10) const;

  /// V o E o U for unitaries U (input side) and V (output side).
  KrausChannel conjugated(const Eigen::MatrixXcd& u_in, const Eigen::MatrixXcd& v_out) const;

 private:
  unsigned input_dim_ = 0;
  unsigned output_dim_ = 0;
  std::vector<Eigen::MatrixXcd> ops_;
};

/// A_1 (x) ... (x) A_n with one d_i x d_i factor per party.
struct LocalOperator {
  SystemShape shape;
  std::vector<Eigen::MatrixXcd> factors;
};

/// LocalOperator whose factors are unitary within 1e-10.
class LocalUnitary {
 public:
  LocalUnitary() = default;
  /// Throws InvalidArgument on a non-unitary or mis-sized factor.
  LocalUnitary(SystemShape shape, std::vector<Eigen::MatrixXcd> factors);

  const SystemShape& shape() const { return op_.shape; }
  const std::vector<Eigen::MatrixXcd>& factors() const { return op_.factors; }
  const LocalOperator& as_operator() const { return op_; }
  LocalUnitary adjoint() const;

 private:
  LocalOperator op_;
};

// ---------------------------------------------------------------------------

/// ghz: sum_j |j...j> (j below the smallest local dimension), needs n >= 2.
/// w: sum over parties of |0..1..0>, needs n >= 2. bell: ghz on (2,2).
/// product: |0...0>. basis: |index>. All exact with integer amplitudes.
StateVector standard_state(std::string_view name, const SystemShape& shape,
                           std::uint64_t index = 0);
StateVector ghz_state(unsigned parties, unsigned dim);
StateVector w_state(unsigned parties);

/// psi^(x)r regrouped so the r copies of party i form one party of dimension
/// d_i^r; copy 0 is the most significant digit of each merged party.
StateVector tensor_power(const StateVector& state, unsigned r,
                         const ResourceGuard& guard = ResourceGuard::from_env());

/// Reduced operator on the parties in `keep` (any order; result uses
/// ascending party order). Exact when the input is exact.
DensityMatrix partial_trace(const StateVector& state, std::vector<std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep);

/// Spectral purification sum_k sqrt(lambda_k) |v_k>|k> on shape + (ancilla),
/// eigenvalues in descending order. Throws InvalidArgument when rho is not
/// PSD within `tol` or its rank exceeds ancilla_dim.
StateVector purify(const DensityMatrix& rho, unsigned ancilla_dim, double tol = 1e-9);
/// Exact purification from a caller-supplied factor M (dim x ancilla_dim,
/// row-major) with M M^dagger == rho exactly.
StateVector purify_with_factor(const DensityMatrix& rho, const std::vector<Scalar>& factor,
                               unsigned ancilla_dim);

/// (I (x) E)(|Psi><Psi|) with the unnormalized |Psi> = sum_j |j>|j>, on shape
/// (input_dim, output_dim).
DensityMatrix choi_state(const KrausChannel& channel);

Eigen::MatrixXcd haar_unitary(unsigned dim, std::uint64_t seed);
/// Per-party Haar unitaries from one seeded stream; same seed, same bits.
LocalUnitary random_local_unitary(const SystemShape& shape, std::uint64_t seed);
/// Determinant-one factors G / det(G)^(1/d) from complex Gaussian G. When
/// `unitary_last` is set, the last factor is Haar unitary instead.
LocalOperator random_sl_operator(const SystemShape& shape, std::uint64_t seed,
                                 bool unitary_last = false);
/// Complex Gaussian amplitudes, normalized.
StateVector random_state(const SystemShape& shape, std::uint64_t seed);

StateVector apply_local(const LocalOperator& op, const StateVector& state);
StateVector apply_local_unitary(const LocalUnitary& g, const StateVector& state);

}  // namespace invforge
