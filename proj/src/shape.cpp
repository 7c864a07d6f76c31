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

#include "invforge/shape.hpp"

#include <algorithm>
#include <charconv>

#include "invforge/errors.hpp"

namespace invforge {

SystemShape::SystemShape(std::vector<unsigned> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidArgument("shape needs at least one party");
  total_ = 1;
  for (unsigned d : dims_) {
    if (d < 2) throw InvalidArgument("every local dimension must be >= 2");
    total_ *= d;
    if (total_ >= (std::uint64_t{1} << 32)) {
      throw InvalidArgument("total dimension must stay below 2^32");
    }
  }
}

SystemShape SystemShape::parse(std::string_view text) {
  std::vector<unsigned> dims;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("cannot parse shape '" + std::string(text) + "'");
    }
    dims.push_back(v);
    pos = comma + 1;
  }
  return SystemShape(std::move(dims));
}

unsigned SystemShape::max_dim() const { return *std::max_element(dims_.begin(), dims_.end()); }

void SystemShape::check_party(std::size_t party) const {
  if (party >= dims_.size()) {
    throw InvalidArgument("party " + std::to_string(party) + " out of range for shape " +
                          to_string());
  }
}

std::vector<unsigned> SystemShape::digits(std::uint64_t flat) const {
  if (flat >= total_) throw InvalidArgument("flat index out of range");
  std::vector<unsigned> out(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    out[k] = static_cast<unsigned>(flat % dims_[k]);
    flat /= dims_[k];
  }
  return out;
}

std::uint64_t SystemShape::flat(std::span<const unsigned> digits) const {
  if (digits.size() != dims_.size()) throw InvalidArgument("digit count differs from party count");
  std::uint64_t f = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] >= dims_[k]) throw InvalidArgument("digit out of range");
    f = f * dims_[k] + digits[k];
  }
  return f;
}

std::uint64_t SystemShape::complement_dim(std::size_t party) const {
  check_party(party);
  return total_ / dims_[party];
}

std::uint64_t SystemShape::insert_digit(std::size_t party, unsigned digit,
                                        std::uint64_t rest) const {
  check_party(party);
  std::uint64_t low = 1;
  for (std::size_t k = party + 1; k < dims_.size(); ++k) low *= dims_[k];
  const std::uint64_t high = rest / low;
  return (high * dims_[party] + digit) * low + rest % low;
}

SystemShape SystemShape::with_party(unsigned dim) const {
  auto d = dims_;
  d.push_back(dim);
  return SystemShape(std::move(d));
}

SystemShape SystemShape::without_last() const {
  if (dims_.size() < 2) throw InvalidArgument("cannot drop the only party");
  return SystemShape(std::vector<unsigned>(dims_.begin(), dims_.end() - 1));
}

std::string SystemShape::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(dims_[k]);
  }
  return s;
}

}  // namespace invforge
