// Copyright 2026 The Caudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAUDIT_RATIONAL_HPP_
#define CAUDIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace caudit {

// Arbitrary-precision rational. Every probability and every ratio in the
// library is one of these; floating point appears only in display output.
// Always stored in lowest terms with a positive denominator (GMP keeps the
// canonical form for us after every operation).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors int
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p/q" or a bare integer. Throws Errc::kParseError on anything else.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  // "p" when the denominator is 1, else "p/q".  The model DSL format.
  std::string str() const;
  // Always "p/q", even for integers.  The report format.
  std::string frac_str() const;

  // Display-only conversions.
  double to_double() const { return q_.get_d(); }
  // Natural log, robust for operands whose double conversion would overflow.
  double log() const;

 private:
  mpq_class q_;
};

// Exact upper bound u >= e^x for rational x >= 0, via a truncated Taylor sum
// plus a geometric tail bound. Used to turn "--eps" inputs into conservative
// rational ratio bounds.
Rational exp_upper_bound(const Rational& x);

// Extended ratio value: the result of comparing two nonnegative quantities
// multiplicatively. Vacuous when both are zero, Infinite when only the
// denominator is.
class Ratio {
 public:
  enum class Kind { kFinite, kInfinite, kVacuous };

  static Ratio finite(Rational value) { return Ratio(Kind::kFinite, std::move(value)); }
  static Ratio one() { return finite(Rational(1)); }
  static Ratio infinite() { return Ratio(Kind::kInfinite, Rational(0)); }
  static Ratio vacuous() { return Ratio(Kind::kVacuous, Rational(0)); }

  // ratio_bound: Vacuous if p = q = 0, Infinite if p > 0 and q = 0,
  // else the exact quotient p/q. Requires p, q >= 0.
  static Ratio bound(const Rational& p, const Rational& q);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_vacuous() const { return kind_ == Kind::kVacuous; }
  bool is_one() const { return is_finite() && value_.is_one(); }

  // Value accessor; only meaningful for finite ratios.
  const Rational& value() const { return value_; }

  // Total order used for "tightest ratio" folding: finite < Infinite;
  // Vacuous compares below everything (it never tightens a bound).
  bool operator<=(const Ratio& o) const;
  bool operator==(const Ratio& o) const;

  // Whether this ratio is within a finite bound k (Infinite never is;
  // Vacuous always is).
  bool within(const Rational& k) const;

  Ratio squared() const;

  // "p/q", "inf", or "vacuous".
  std::string str() const;
  // ln of the ratio for display: "0.000000" style, "inf" when infinite.
  std::string epsilon_str() const;

 private:
  Ratio(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

}  // namespace caudit

#endif  // CAUDIT_RATIONAL_HPP_
