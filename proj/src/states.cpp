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

#include "invforge/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "invforge/errors.hpp"

namespace invforge {

namespace {

std::vector<Complex> to_float(const std::vector<Scalar>& v) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_complex();
  return out;
}

// Splits every flat index into (composite over kept parties, composite over
// the rest), both in mixed radix with the original party order.
struct Split {
  std::vector<std::uint64_t> kept;
  std::vector<std::uint64_t> rest;
  SystemShape kept_shape;
  std::uint64_t rest_dim = 1;
};

Split split_parties(const SystemShape& shape, std::vector<std::size_t> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set must be nonempty");
  if (keep.back() >= shape.parties()) throw InvalidArgument("partial_trace: party out of range");
  std::vector<bool> is_kept(shape.parties(), false);
  std::vector<unsigned> kept_dims;
  for (auto k : keep) {
    is_kept[k] = true;
    kept_dims.push_back(shape.dim(k));
  }
  Split s;
  s.kept_shape = SystemShape(kept_dims);
  const std::uint64_t n = shape.total_dim();
  s.kept.resize(n);
  s.rest.resize(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    auto digits = shape.digits(j);
    std::uint64_t a = 0, b = 0;
    for (std::size_t p = 0; p < shape.parties(); ++p) {
      if (is_kept[p]) {
        a = a * shape.dim(p) + digits[p];
      } else {
        b = b * shape.dim(p) + digits[p];
      }
    }
    s.kept[j] = a;
    s.rest[j] = b;
  }
  for (std::size_t p = 0; p < shape.parties(); ++p) {
    if (!is_kept[p]) s.rest_dim *= shape.dim(p);
  }
  return s;
}

void check_factor_sizes(const SystemShape& shape, const std::vector<Eigen::MatrixXcd>& f) {
  if (f.size() != shape.parties()) {
    throw DimensionMismatch("local operator: factor count differs from party count");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].rows() != shape.dim(i) || f[i].cols() != shape.dim(i)) {
      throw DimensionMismatch("local operator: factor " + std::to_string(i) + " is not " +
                              std::to_string(shape.dim(i)) + "x" + std::to_string(shape.dim(i)));
    }
  }
}

Eigen::MatrixXcd gaussian_matrix(unsigned dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (unsigned r = 0; r < dim; ++r) {
    for (unsigned c = 0; c < dim; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return z;
}

Eigen::MatrixXcd haar_from(unsigned dim, std::mt19937_64& rng) {
  Eigen::MatrixXcd z = gaussian_matrix(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (unsigned c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    const double a = std::abs(d);
    q.col(c) *= a == 0.0 ? Complex(1.0) : d / a;
  }
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector StateVector::exact(SystemShape shape, std::vector<Scalar> amplitudes) {
  if (amplitudes.size() != shape.total_dim()) {
    throw DimensionMismatch("state has " + std::to_string(amplitudes.size()) +
                            " amplitudes, shape " + shape.to_string() + " needs " +
                            std::to_string(shape.total_dim()));
  }
  StateVector s;
  s.shape_ = std::move(shape);
  s.amps_ = to_float(amplitudes);
  s.exact_ = std::move(amplitudes);
  return s;
}

StateVector StateVector::from_float(SystemShape shape, std::vector<Complex> amplitudes) {
  if (amplitudes.size() != shape.total_dim()) {
    throw DimensionMismatch("state has " + std::to_string(amplitudes.size()) +
                            " amplitudes, shape " + shape.to_string() + " needs " +
                            std::to_string(shape.total_dim()));
  }
  StateVector s;
  s.shape_ = std::move(shape);
  s.amps_ = std::move(amplitudes);
  return s;
}

const std::vector<Scalar>& StateVector::exact_amplitudes() const {
  if (!exact_) throw ModeError("exact amplitudes requested on a float-only state");
  return *exact_;
}

double StateVector::norm_squared() const {
  double n = 0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

Scalar StateVector::norm_squared_exact() const {
  mpq_class n = 0;
  for (const auto& a : exact_amplitudes()) n += a.norm();
  return Scalar(n);
}

bool StateVector::normalized() const {
  if (exact_) return norm_squared_exact() == Scalar(1);
  return std::abs(norm_squared() - 1.0) < 1e-12;
}

StateVector StateVector::scaled(const Scalar& lambda) const {
  if (exact_) {
    std::vector<Scalar> out = *exact_;
    for (auto& a : out) a *= lambda;
    return exact(shape_, std::move(out));
  }
  std::vector<Complex> out = amps_;
  const Complex l = lambda.to_complex();
  for (auto& a : out) a *= l;
  return from_float(shape_, std::move(out));
}

StateVector StateVector::normalized_float() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero state");
  std::vector<Complex> out = amps_;
  for (auto& a : out) a /= n;
  return from_float(shape_, std::move(out));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::exact(SystemShape shape, std::vector<Scalar> entries) {
  const std::uint64_t n = shape.total_dim();
  if (entries.size() != n * n) throw DimensionMismatch("density matrix: wrong entry count");
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a; b < n; ++b) {
      if (entries[a * n + b] != entries[b * n + a].conj()) {
        throw InvalidArgument("density matrix is not Hermitian");
      }
    }
  }
  DensityMatrix d;
  d.shape_ = std::move(shape);
  d.m_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      d.m_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          entries[a * n + b].to_complex();
    }
  }
  d.exact_ = std::move(entries);
  return d;
}

DensityMatrix DensityMatrix::from_float(SystemShape shape, Eigen::MatrixXcd matrix) {
  const auto n = static_cast<Eigen::Index>(shape.total_dim());
  if (matrix.rows() != n || matrix.cols() != n) {
    throw DimensionMismatch("density matrix: size differs from shape dimension");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  DensityMatrix d;
  d.shape_ = std::move(shape);
  d.m_ = std::move(matrix);
  return d;
}

const std::vector<Scalar>& DensityMatrix::exact_entries() const {
  if (!exact_) throw ModeError("exact entries requested on a float density matrix");
  return *exact_;
}

const Scalar& DensityMatrix::entry(std::uint64_t row, std::uint64_t col) const {
  return exact_entries().at(row * dim() + col);
}

Scalar DensityMatrix::trace_exact() const {
  Scalar t;
  for (std::uint64_t a = 0; a < dim(); ++a) t += entry(a, a);
  return t;
}

// ---------------------------------------------------------------------------
// KrausChannel

KrausChannel::KrausChannel(unsigned input_dim, unsigned output_dim,
                           std::vector<Eigen::MatrixXcd> ops)
    : input_dim_(input_dim), output_dim_(output_dim), ops_(std::move(ops)) {
  if (input_dim_ == 0 || output_dim_ == 0) throw InvalidArgument("channel dims must be positive");
  if (ops_.empty()) throw InvalidArgument("channel needs at least one Kraus operator");
  for (const auto& e : ops_) {
    if (e.rows() != output_dim_ || e.cols() != input_dim_) {
      throw DimensionMismatch("Kraus operator is not output_dim x input_dim");
    }
  }
}

bool KrausChannel::is_trace_preserving(double tol) const {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(input_dim_, input_dim_);
  for (const auto& e : ops_) s += e.adjoint() * e;
  s -= Eigen::MatrixXcd::Identity(input_dim_, input_dim_);
  return s.cwiseAbs().maxCoeff() <= tol;
}

KrausChannel KrausChannel::conjugated(const Eigen::MatrixXcd& u_in,
                                      const Eigen::MatrixXcd& v_out) const {
  if (u_in.rows() != input_dim_ || u_in.cols() != input_dim_ || v_out.rows() != output_dim_ ||
      v_out.cols() != output_dim_) {
    throw DimensionMismatch("conjugated: unitary sizes do not match the channel");
  }
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(ops_.size());
  for (const auto& e : ops_) out.push_back(v_out * e * u_in);
  return KrausChannel(input_dim_, output_dim_, std::move(out));
}

// ---------------------------------------------------------------------------
// LocalUnitary

LocalUnitary::LocalUnitary(SystemShape shape, std::vector<Eigen::MatrixXcd> factors) {
  check_factor_sizes(shape, factors);
  for (const auto& u : factors) {
    const auto id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    if ((u.adjoint() * u - id).cwiseAbs().maxCoeff() > 1e-10) {
      throw InvalidArgument("local unitary factor is not unitary within 1e-10");
    }
  }
  op_.shape = std::move(shape);
  op_.factors = std::move(factors);
}

LocalUnitary LocalUnitary::adjoint() const {
  std::vector<Eigen::MatrixXcd> f;
  for (const auto& u : op_.factors) f.push_back(u.adjoint());
  return LocalUnitary(op_.shape, std::move(f));
}

// ---------------------------------------------------------------------------
// Standard states

StateVector standard_state(std::string_view name, const SystemShape& shape, std::uint64_t index) {
  const std::uint64_t n = shape.total_dim();
  std::vector<Scalar> amps(n);
  if (name == "ghz") {
    if (shape.parties() < 2) throw InvalidArgument("ghz needs at least two parties");
    unsigned dmin = *std::min_element(shape.dims().begin(), shape.dims().end());
    for (unsigned j = 0; j < dmin; ++j) {
      std::vector<unsigned> digits(shape.parties(), j);
      amps[shape.flat(digits)] = 1;
    }
  } else if (name == "w") {
    if (shape.parties() < 2) throw InvalidArgument("w needs at least two parties");
    for (std::size_t p = 0; p < shape.parties(); ++p) {
      std::vector<unsigned> digits(shape.parties(), 0);
      digits[p] = 1;
      amps[shape.flat(digits)] = 1;
    }
  } else if (name == "bell") {
    if (!(shape == SystemShape({2, 2}))) throw InvalidArgument("bell needs shape (2,2)");
    amps[0] = 1;
    amps[3] = 1;
  } else if (name == "product") {
    amps[0] = 1;
  } else if (name == "basis") {
    if (index >= n) throw InvalidArgument("basis index out of range");
    amps[index] = 1;
  } else {
    throw InvalidArgument("unknown standard state '" + std::string(name) + "'");
  }
  return StateVector::exact(shape, std::move(amps));
}

StateVector ghz_state(unsigned parties, unsigned dim) {
  return standard_state("ghz", SystemShape(std::vector<unsigned>(parties, dim)));
}

StateVector w_state(unsigned parties) {
  return standard_state("w", SystemShape(std::vector<unsigned>(parties, 2)));
}

// ---------------------------------------------------------------------------
// tensor_power

StateVector tensor_power(const StateVector& state, unsigned r, const ResourceGuard& guard) {
  if (r == 0) throw InvalidArgument("tensor_power: r must be >= 1");
  if (r == 1) return state;
  const SystemShape& shape = state.shape();
  const std::uint64_t d = shape.total_dim();
  long double total = std::pow(static_cast<long double>(d), r);
  if (total >= static_cast<long double>(std::uint64_t{1} << 32)) {
    throw ResourceLimit("tensor_power: dimension " + std::to_string(d) + "^" +
                        std::to_string(r) + " too large");
  }
  guard.check_ambient(static_cast<Index>(total), "tensor_power");

  std::vector<unsigned> dims;
  for (unsigned di : shape.dims()) {
    unsigned v = 1;
    for (unsigned k = 0; k < r; ++k) v *= di;
    dims.push_back(v);
  }
  SystemShape out_shape(dims);
  const std::uint64_t n = out_shape.total_dim();

  std::vector<std::vector<unsigned>> copy_digits(d);
  for (std::uint64_t j = 0; j < d; ++j) copy_digits[j] = shape.digits(j);

  // Iterate over every r-tuple of copy indices.
  std::vector<std::uint64_t> tuple(r, 0);
  std::vector<unsigned> merged(shape.parties());
  const bool exact = state.is_exact();
  std::vector<Scalar> exact_out(exact ? n : 0);
  std::vector<Complex> float_out(exact ? 0 : n);
  while (true) {
    std::fill(merged.begin(), merged.end(), 0U);
    for (unsigned c = 0; c < r; ++c) {
      for (std::size_t p = 0; p < shape.parties(); ++p) {
        merged[p] = merged[p] * shape.dim(p) + copy_digits[tuple[c]][p];
      }
    }
    const std::uint64_t flat = out_shape.flat(merged);
    if (exact) {
      Scalar a(1);
      for (unsigned c = 0; c < r && !a.is_zero(); ++c) a *= state.exact_amplitudes()[tuple[c]];
      exact_out[flat] = std::move(a);
    } else {
      Complex a(1.0);
      for (unsigned c = 0; c < r; ++c) a *= state.amplitudes()[tuple[c]];
      float_out[flat] = a;
    }
    unsigned c = r;
    while (c > 0 && ++tuple[c - 1] == d) tuple[--c] = 0;
    if (c == 0) break;
  }
  return exact ? StateVector::exact(out_shape, std::move(exact_out))
               : StateVector::from_float(out_shape, std::move(float_out));
}

// ---------------------------------------------------------------------------
// partial_trace

DensityMatrix partial_trace(const StateVector& state, std::vector<std::size_t> keep) {
  const Split s = split_parties(state.shape(), std::move(keep));
  const std::uint64_t n = state.shape().total_dim();
  const std::uint64_t k = s.kept_shape.total_dim();
  std::vector<std::vector<std::uint64_t>> groups(s.rest_dim);
  for (std::uint64_t j = 0; j < n; ++j) groups[s.rest[j]].push_back(j);

  if (state.is_exact()) {
    const auto& a = state.exact_amplitudes();
    std::vector<Scalar> rho(k * k);
    for (const auto& g : groups) {
      for (auto j : g) {
        if (a[j].is_zero()) continue;
        for (auto jp : g) {
          if (a[jp].is_zero()) continue;
          rho[s.kept[j] * k + s.kept[jp]] += a[j] * a[jp].conj();
        }
      }
    }
    return DensityMatrix::exact(s.kept_shape, std::move(rho));
  }
  const auto& a = state.amplitudes();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(k),
                                                static_cast<Eigen::Index>(k));
  for (const auto& g : groups) {
    for (auto j : g) {
      for (auto jp : g) {
        rho(static_cast<Eigen::Index>(s.kept[j]), static_cast<Eigen::Index>(s.kept[jp])) +=
            a[j] * std::conj(a[jp]);
      }
    }
  }
  return DensityMatrix::from_float(s.kept_shape, std::move(rho));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep) {
  const Split s = split_parties(rho.shape(), std::move(keep));
  const std::uint64_t n = rho.dim();
  const std::uint64_t k = s.kept_shape.total_dim();
  if (rho.is_exact()) {
    std::vector<Scalar> out(k * k);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        if (s.rest[a] == s.rest[b]) out[s.kept[a] * k + s.kept[b]] += rho.entry(a, b);
      }
    }
    return DensityMatrix::exact(s.kept_shape, std::move(out));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(k),
                                                static_cast<Eigen::Index>(k));
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if (s.rest[a] == s.rest[b]) {
        out(static_cast<Eigen::Index>(s.kept[a]), static_cast<Eigen::Index>(s.kept[b])) +=
            rho.matrix()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return DensityMatrix::from_float(s.kept_shape, std::move(out));
}

// ---------------------------------------------------------------------------
// purification

StateVector purify(const DensityMatrix& rho, unsigned ancilla_dim, double tol) {
  if (ancilla_dim < 2) throw InvalidArgument("purify: ancilla dimension must be >= 2");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.matrix());
  if (eig.info() != Eigen::Success) throw InvalidArgument("purify: eigendecomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (lambda.minCoeff() < -tol * scale) {
    throw InvalidArgument("purify: matrix is not positive semidefinite within tolerance");
  }
  std::vector<Eigen::Index> order;
  for (Eigen::Index i = lambda.size(); i-- > 0;) {
    if (lambda(i) > tol * scale) order.push_back(i);
  }
  if (order.size() > ancilla_dim) {
    throw InvalidArgument("purify: rank " + std::to_string(order.size()) +
                          " exceeds ancilla dimension " + std::to_string(ancilla_dim));
  }
  const std::uint64_t n = rho.dim();
  std::vector<Complex> amps(n * ancilla_dim, Complex(0.0));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double w = std::sqrt(lambda(order[k]));
    const auto v = eig.eigenvectors().col(order[k]);
    for (std::uint64_t a = 0; a < n; ++a) {
      amps[a * ancilla_dim + k] = w * v(static_cast<Eigen::Index>(a));
    }
  }
  return StateVector::from_float(rho.shape().with_party(ancilla_dim), std::move(amps));
}

StateVector purify_with_factor(const DensityMatrix& rho, const std::vector<Scalar>& factor,
                               unsigned ancilla_dim) {
  const std::uint64_t n = rho.dim();
  if (factor.size() != n * ancilla_dim) {
    throw DimensionMismatch("purify_with_factor: factor must be dim x ancilla_dim");
  }
  if (ancilla_dim < 2) throw InvalidArgument("purify_with_factor: ancilla dimension must be >= 2");
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      Scalar s;
      for (unsigned k = 0; k < ancilla_dim; ++k) {
        s += factor[a * ancilla_dim + k] * factor[b * ancilla_dim + k].conj();
      }
      if (s != rho.entry(a, b)) {
        throw InvalidArgument("purify_with_factor: M M^dagger differs from rho");
      }
    }
  }
  return StateVector::exact(rho.shape().with_party(ancilla_dim), factor);
}

// ---------------------------------------------------------------------------
// Choi states

DensityMatrix choi_state(const KrausChannel& channel) {
  const unsigned din = channel.input_dim(), dout = channel.output_dim();
  if (din < 2 || dout < 2) throw InvalidArgument("choi_state: dims must be >= 2");
  const Eigen::Index n = static_cast<Eigen::Index>(din) * dout;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : channel.kraus_ops()) {
    Eigen::VectorXcd v(n);
    for (unsigned j = 0; j < din; ++j) {
      for (unsigned o = 0; o < dout; ++o) v(static_cast<Eigen::Index>(j) * dout + o) = e(o, j);
    }
    rho += v * v.adjoint();
  }
  return DensityMatrix::from_float(SystemShape({din, dout}), std::move(rho));
}

// ---------------------------------------------------------------------------
// random operators

Eigen::MatrixXcd haar_unitary(unsigned dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_from(dim, rng);
}

LocalUnitary random_local_unitary(const SystemShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eigen::MatrixXcd> f;
  for (unsigned d : shape.dims()) f.push_back(haar_from(d, rng));
  return LocalUnitary(shape, std::move(f));
}

LocalOperator random_sl_operator(const SystemShape& shape, std::uint64_t seed, bool unitary_last) {
  std::mt19937_64 rng(seed);
  LocalOperator op{shape, {}};
  for (std::size_t i = 0; i < shape.parties(); ++i) {
    const unsigned d = shape.dim(i);
    if (unitary_last && i + 1 == shape.parties()) {
      op.factors.push_back(haar_from(d, rng));
      continue;
    }
    Eigen::MatrixXcd g = gaussian_matrix(d, rng);
    const Complex det = g.determinant();
    op.factors.push_back(g / std::pow(det, 1.0 / d));
  }
  return op;
}

StateVector random_state(const SystemShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> amps(shape.total_dim());
  for (auto& a : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = Complex(re, im);
  }
  return StateVector::from_float(shape, std::move(amps)).normalized_float();
}

StateVector apply_local(const LocalOperator& op, const StateVector& state) {
  if (!(op.shape == state.shape())) throw DimensionMismatch("apply_local: shape mismatch");
  check_factor_sizes(op.shape, op.factors);
  const SystemShape& shape = state.shape();
  std::vector<Complex> cur = state.amplitudes();
  std::vector<Complex> next(cur.size());
  std::uint64_t low = shape.total_dim();
  for (std::size_t i = 0; i < shape.parties(); ++i) {
    const unsigned d = shape.dim(i);
    low /= d;
    const std::uint64_t high = shape.total_dim() / (low * d);
    const auto& m = op.factors[i];
    for (std::uint64_t h = 0; h < high; ++h) {
      for (std::uint64_t l = 0; l < low; ++l) {
        for (unsigned jp = 0; jp < d; ++jp) {
          Complex acc = 0;
          for (unsigned j = 0; j < d; ++j) acc += m(jp, j) * cur[(h * d + j) * low + l];
          next[(h * d + jp) * low + l] = acc;
        }
      }
    }
    std::swap(cur, next);
  }
  return StateVector::from_float(shape, std::move(cur));
}

StateVector apply_local_unitary(const LocalUnitary& g, const StateVector& state) {
  return apply_local(g.as_operator(), state);
}

}  // namespace invforge
