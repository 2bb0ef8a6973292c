// Copyright 2026 The slopekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "slopekit/arith.hpp"

namespace slopekit::padic {

/// An exact rational valuation, or +infinity (the valuation of zero).
class ExtendedValuation {
 public:
  ExtendedValuation(long v) : value_(Rational(v)) {}  // NOLINT: implicit from integers
  explicit ExtendedValuation(Rational v) : value_(std::move(v)) {}

  static ExtendedValuation infinity() { return ExtendedValuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Throws std::logic_error for infinity.
  const Rational& value() const;

  std::string str() const;

  friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b);
  friend ExtendedValuation operator-(const ExtendedValuation& a, const Rational& b);
  friend bool operator==(const ExtendedValuation& a, const ExtendedValuation& b);
  friend bool operator<(const ExtendedValuation& a, const ExtendedValuation& b);
  friend bool operator<=(const ExtendedValuation& a, const ExtendedValuation& b) { return !(b < a); }
  friend bool operator>(const ExtendedValuation& a, const ExtendedValuation& b) { return b < a; }
  friend bool operator>=(const ExtendedValuation& a, const ExtendedValuation& b) { return !(a < b); }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedValuation& v) { return os << v.str(); }

 private:
  ExtendedValuation() = default;
  std::optional<Rational> value_;
};

ExtendedValuation valuation(const Integer& n, long p);
ExtendedValuation valuation(const Rational& q, long p);

/// v_p of a nonzero integer as a plain count; the caller guarantees n != 0.
long valuation_count(const Integer& n, long p);

/// Legendre's formula: v_p(n!).
long factorial_valuation(long n, long p);

/// Number of carries when adding b and a - b in base p (Kummer), which is
/// v_p(C(a, b)).
long binomial_valuation(long a, long b, long p);

/// top (top - 1) ... (top - w + 1) / w!.
Rational generalized_binomial(const Rational& top, long w);

/// The Teichmuller representative of mu mod p, as an integer in [0, p^M).
/// Found as the fixed point of x -> x^p mod p^M started from mu.
Integer teichmuller_lift(long mu, long p, unsigned M);

/// Derived parameters of a weight: r = k - 2, rho = floor((k - 1)/(p + 1)),
/// eps_cal = floor(log_p(k - 1)), and nu = floor(slope) + 1 when a slope
/// is supplied.
struct Params {
  long p = 0;
  long k = 0;
  long r = 0;
  long rho = 0;
  long eps_cal = 0;
  std::optional<long> nu;

  static Params make(long p, long k);
  Params with_slope(const Rational& slope) const;
};

}  // namespace slopekit::padic
