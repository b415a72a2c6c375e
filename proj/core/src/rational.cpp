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

#include "caudit/rational.hpp"

#include <cmath>
#include <cstdio>

#include "caudit/error.hpp"

namespace caudit {

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::kInvalidParameter, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) fail(Errc::kInvalidParameter, "division by zero rational");
  return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) fail(Errc::kParseError, "empty rational");
  std::string s(text);
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) fail(Errc::kParseError, "bad rational '" + s + "'");
    return Rational(mpq_class(mpz_class(s, 10)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) {
    fail(Errc::kParseError, "bad rational '" + s + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) fail(Errc::kParseError, "zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

std::string Rational::frac_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::log() const {
  if (sign() <= 0) return -std::numeric_limits<double>::infinity();
  // log2 of num and den separately so huge operands stay in range.
  signed long exp_num = 0;
  signed long exp_den = 0;
  const double m_num = mpz_get_d_2exp(&exp_num, q_.get_num().get_mpz_t());
  const double m_den = mpz_get_d_2exp(&exp_den, q_.get_den().get_mpz_t());
  const double log2v =
      (std::log2(m_num) + static_cast<double>(exp_num)) -
      (std::log2(m_den) + static_cast<double>(exp_den));
  return log2v * M_LN2;
}

Rational exp_upper_bound(const Rational& x) {
  if (x.sign() < 0) fail(Errc::kInvalidParameter, "exp_upper_bound needs x >= 0");
  // Split off the integer part: e^x = e^n * e^f with 0 <= f < 1, and bound
  // e <= 2.7182818284590456 (a rational just above e).
  const Rational e_up(27182818284590456L, 10000000000000000L);
  mpz_class n = x.raw().get_num() / x.raw().get_den();  // floor, x >= 0
  Rational frac = x - Rational(mpq_class(n));
  Rational int_part(1);
  for (mpz_class i = 0; i < n; ++i) int_part *= e_up;
  // Taylor sum for the fractional part with a tail bound: for 0 <= f < 1 and
  // k terms, the remainder is below 2 * f^k / k! once k >= 2.
  const int kTerms = 24;
  Rational term(1);
  Rational sum(1);
  for (int k = 1; k < kTerms; ++k) {
    term = term * frac / Rational(k);
    sum += term;
  }
  Rational tail = term * frac / Rational(kTerms) * Rational(2);
  return int_part * (sum + tail);
}

Ratio Ratio::bound(const Rational& p, const Rational& q) {
  if (p.sign() < 0 || q.sign() < 0) {
    fail(Errc::kInvalidParameter, "ratio_bound needs nonnegative operands");
  }
  if (q.is_zero()) {
    return p.is_zero() ? vacuous() : infinite();
  }
  return finite(p / q);
}

bool Ratio::operator<=(const Ratio& o) const {
  if (is_vacuous()) return true;
  if (o.is_vacuous()) return false;
  if (o.is_infinite()) return true;
  if (is_infinite()) return false;
  return value_ <= o.value_;
}

bool Ratio::operator==(const Ratio& o) const {
  if (kind_ != o.kind_) return false;
  return !is_finite() || value_ == o.value_;
}

bool Ratio::within(const Rational& k) const {
  switch (kind_) {
    case Kind::kVacuous: return true;
    case Kind::kInfinite: return false;
    case Kind::kFinite: return value_ <= k;
  }
  return false;
}

Ratio Ratio::squared() const {
  if (is_finite()) return finite(value_ * value_);
  return *this;
}

std::string Ratio::str() const {
  switch (kind_) {
    case Kind::kVacuous: return "vacuous";
    case Kind::kInfinite: return "inf";
    case Kind::kFinite: return value_.frac_str();
  }
  return "?";
}

std::string Ratio::epsilon_str() const {
  if (is_infinite()) return "inf";
  if (is_vacuous()) return "0.000000";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value_.log());
  return buf;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kCycleDetected: return "CycleDetected";
    case Errc::kMissingEquation: return "MissingEquation";
    case Errc::kNonTotalTable: return "NonTotalTable";
    case Errc::kDomainMismatch: return "DomainMismatch";
    case Errc::kInterventionOnBackground: return "InterventionOnBackground";
    case Errc::kIncompleteBackground: return "IncompleteBackground";
    case Errc::kInconsistentContext: return "InconsistentContext";
    case Errc::kUnknownVariable: return "UnknownVariable";
    case Errc::kRandomnessNotFresh: return "RandomnessNotFresh";
    case Errc::kDegenerateSensitive: return "DegenerateSensitive";
    case Errc::kInvalidMetric: return "InvalidMetric";
    case Errc::kInvalidParameter: return "InvalidParameter";
    case Errc::kInvalidPrior: return "InvalidPrior";
    case Errc::kInvalidConfig: return "InvalidConfig";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kParseError: return "ParseError";
    case Errc::kLimitExceeded: return "LimitExceeded";
  }
  return "UnknownError";
}

}  // namespace caudit
