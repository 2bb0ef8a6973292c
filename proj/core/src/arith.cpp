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


#include "slopekit/arith.hpp"

namespace slopekit {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
}

Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer binomial(long n, long k) { return binomial(Integer(n), k); }

Integer falling_factorial(const Integer& x, long n) {
  Integer out = 1;
  for (long u = 0; u < n; ++u) out *= x - u;
  return out;
}

Rational falling_factorial(const Rational& x, long n) {
  Rational out = 1;
  for (long u = 0; u < n; ++u) out *= x - u;
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer ipow(long p, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
  return out;
}

Rational rpow(long p, long e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long floor_log(long p, const Integer& n) {
  if (n < 1) throw std::invalid_argument("floor_log needs n >= 1");
  long e = 0;
  Integer power = p;
  while (power <= n) {
    power *= p;
    ++e;
  }
  return e;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace slopekit
