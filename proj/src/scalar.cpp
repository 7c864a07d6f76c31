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

#include "invforge/scalar.hpp"

#include <cctype>

#include "invforge/errors.hpp"

namespace invforge {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view re, std::string_view im) {
  return Scalar(parse_rational(re), parse_rational(im));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero scalar");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned n) const {
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  if (sgn(im_) > 0) {
    s += " + " + im_.get_str() + "i";
  } else {
    s += " - " + mpq_class(-im_).get_str() + "i";
  }
  return s;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return q;
}

}  // namespace invforge
