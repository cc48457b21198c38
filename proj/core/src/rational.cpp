// Copyright 2026 The collective-arb Authors
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

#include "collective_arb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace collective_arb {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  boost::multiprecision::mpz_int n{std::string(num)};
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational value(n, d);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

int sign(const Rational& value) { return value.sign(); }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::kFinite) throw std::logic_error("value() of an infinite price");
  return value_;
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
    case Kind::kNegInf:
      return pos_inf();
    case Kind::kPosInf:
      return neg_inf();
    case Kind::kFinite:
      break;
  }
  return ExtendedRational(Rational(-value_));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedRational::Kind::kFinite || a.value_ == b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.kind_ == ExtendedRational::Kind::kFinite && a.value_ < b.value_;
}

ExtendedRational add(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtendedRational::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtendedRational::pos_inf();
  return ExtendedRational(Rational(a.value() + b.value()));
}

std::string to_string(const ExtendedRational& value) {
  if (value.is_neg_inf()) return "-inf";
  if (value.is_pos_inf()) return "+inf";
  return to_string(value.value());
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
  return os << to_string(value);
}

}  // namespace collective_arb
