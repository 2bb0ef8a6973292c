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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slopekit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a computation at a declared p-adic working precision cannot
/// decide an answer (for example a coset key needing more digits than M).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configured resource guard (dimension, precision) would be
/// exceeded. The message always names the guard.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(long n);

/// Throws std::invalid_argument unless p is prime.
void require_prime(long p);

/// C(n, k) with the falling-factorial convention: zero for k < 0, and
/// C(-m, k) = (-1)^k C(m + k - 1, k) for negative tops.
Integer binomial(long n, long k);
Integer binomial(const Integer& n, long k);

/// x (x - 1) ... (x - n + 1); equals 1 for n == 0.
Integer falling_factorial(const Integer& x, long n);
Rational falling_factorial(const Rational& x, long n);

Integer factorial(long n);

/// p^e for e >= 0.
Integer ipow(long p, unsigned long e);

/// p^e as an exact rational; e may be negative.
Rational rpow(long p, long e);

long floor_div(long a, long b);
long ceil_div(long a, long b);

/// Largest e with p^e <= n, for n >= 1.
long floor_log(long p, const Integer& n);
inline long floor_log(long p, long n) { return floor_log(p, Integer(n)); }

/// Canonical residue of x in [0, m).
Integer mod_floor(const Integer& x, const Integer& m);

/// Exact textual form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace slopekit
