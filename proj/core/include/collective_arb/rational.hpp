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

#ifndef COLLECTIVE_ARB_RATIONAL_HPP_
#define COLLECTIVE_ARB_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace collective_arb {

using Rational = boost::multiprecision::mpq_rational;

// Accepts "int" or "int/int" with an optional leading sign and a nonzero
// denominator. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);

int sign(const Rational& value);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// A rational extended by -inf and +inf. Prices take this form: LP
// unboundedness maps to -inf and infeasibility to +inf.
class ExtendedRational {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtendedRational() = default;
  ExtendedRational(Rational value)  // NOLINT(runtime/explicit)
      : kind_(Kind::kFinite), value_(std::move(value)) {}
  ExtendedRational(int value)  // NOLINT(runtime/explicit)
      : kind_(Kind::kFinite), value_(value) {}

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::kNegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }

  // Precondition: is_finite().
  const Rational& value() const;

  ExtendedRational operator-() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(b < a);
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) {
    return b < a;
  }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(a < b);
  }

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_ = 0;
};

// Sum with the convention (+inf) + (-inf) = -inf.
ExtendedRational add(const ExtendedRational& a, const ExtendedRational& b);

// "-inf", "+inf", or the canonical rational string.
std::string to_string(const ExtendedRational& value);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_RATIONAL_HPP_
