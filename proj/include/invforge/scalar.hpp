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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace invforge {

/// Exact element of Q(i): re + i*im with arbitrary-precision rationals.
/// Both parts are always kept canonical (coprime, positive denominator), so
/// operator== is structural equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  /// Parses "p/q" or "p" for each part.
  static Scalar parse(std::string_view re, std::string_view im = "0");
  static Scalar i() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Integer power, n >= 0.
  Scalar pow(unsigned n) const;

  /// Human-readable "a + b i" form.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Always "p/q" (q >= 1), e.g. "3/1", "-1/2", "0/1".
std::string rational_to_string(const mpq_class& q);
/// Accepts "p/q" or "p"; throws ParseError otherwise.
mpq_class parse_rational(std::string_view s);

}  // namespace invforge
