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


#include "slopekit/padic.hpp"

#include <stdexcept>

namespace slopekit::padic {

const Rational& ExtendedValuation::value() const {
  if (!value_) throw std::logic_error("valuation is infinite");
  return *value_;
}

std::string ExtendedValuation::str() const { return value_ ? value_->get_str() : "inf"; }

ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedValuation::infinity();
  return ExtendedValuation(*a.value_ + *b.value_);
}

ExtendedValuation operator-(const ExtendedValuation& a, const Rational& b) {
  if (a.is_infinite()) return a;
  return ExtendedValuation(*a.value_ - b);
}

bool operator==(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const ExtendedValuation& a, const ExtendedValuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

long valuation_count(const Integer& n, long p) {
  Integer rest;
  Integer prime = p;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

ExtendedValuation valuation(const Integer& n, long p) {
  require_prime(p);
  if (n == 0) return ExtendedValuation::infinity();
  return ExtendedValuation(valuation_count(n, p));
}

ExtendedValuation valuation(const Rational& q, long p) {
  require_prime(p);
  if (q == 0) return ExtendedValuation::infinity();
  return ExtendedValuation(valuation_count(q.get_num(), p) - valuation_count(q.get_den(), p));
}

long factorial_valuation(long n, long p) {
  require_prime(p);
  if (n < 0) throw std::invalid_argument("factorial_valuation needs n >= 0");
  long total = 0;
  for (long q = n / p; q > 0; q /= p) total += q;
  return total;
}

long binomial_valuation(long a, long b, long p) {
  require_prime(p);
  if (a < 0 || b < 0 || b > a) {
    throw std::invalid_argument("binomial_valuation needs 0 <= b <= a");
  }
  long x = b;
  long y = a - b;
  long carry = 0;
  long carries = 0;
  while (x > 0 || y > 0 || carry > 0) {
    long digit_sum = x % p + y % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    x /= p;
    y /= p;
  }
  return carries;
}

Rational generalized_binomial(const Rational& top, long w) {
  if (w < 0) throw std::invalid_argument("generalized_binomial needs w >= 0");
  Rational out = falling_factorial(top, w);
  out /= Rational(factorial(w));
  return out;
}

Integer teichmuller_lift(long mu, long p, unsigned M) {
  require_prime(p);
  if (M < 1) throw std::invalid_argument("teichmuller_lift needs M >= 1");
  const Integer modulus = ipow(p, M);
  Integer x = mod_floor(Integer(mu), Integer(p));
  if (x == 0) return 0;
  const Integer exponent = p;
  // x_{j} agrees with the lift mod p^{j+1}, so M rounds always suffice.
  for (unsigned round = 0; round <= M; ++round) {
    Integer next;
    mpz_powm(next.get_mpz_t(), x.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("teichmuller iteration did not reach a fixed point");
}

Params Params::make(long p, long k) {
  require_prime(p);
  if (k < 2) throw std::invalid_argument("weight k must be >= 2");
  Params out;
  out.p = p;
  out.k = k;
  out.r = k - 2;
  out.rho = (k - 1) / (p + 1);
  out.eps_cal = floor_log(p, k - 1);
  return out;
}

Params Params::with_slope(const Rational& slope) const {
  Params out = *this;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), slope.get_num_mpz_t(), slope.get_den_mpz_t());
  out.nu = fl.get_si() + 1;
  return out;
}

}  // namespace slopekit::padic
