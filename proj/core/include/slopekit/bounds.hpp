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
#include <string>
#include <vector>

#include "slopekit/arith.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/padic.hpp"

namespace slopekit::comb {

/// X_i = p^{-i(p-1)} C(r, i(p-1) + alpha) C(R' - i, R').
Rational x_value(long p, long r, long alpha, long rho_prime, long i);

/// X*_i = p^{i(p-1) + 2 alpha - r} C(r, i(p-1) + alpha) C(R' - i, R').
Rational x_star_value(long p, long r, long alpha, long rho_prime, long i);

struct ValuationWitness {
  long index = 0;
  Rational x0;
  Rational xi;
  Rational xi_star;
  std::optional<Rational> cl_pl;  // C_l p^l when index is a valid l
};

ValuationWitness valuation_witnesses(long p, long r, long alpha, long index, CVariant variant);

/// The six strict valuation bounds. "below" compares X_0 with X_i for
/// negative i, "above" with X_i past the constant block, "constants" with
/// C_l p^l.
enum class Bound { general_below, general_above, general_constants, rho_below, rho_above, rho_constants };

std::string to_string(Bound b);
std::optional<Bound> parse_bound(const std::string& name);
CVariant variant_of(Bound b);
const std::vector<Bound>& all_bounds();

enum class Verdict { holds, fails, vacuous };
std::string to_string(Verdict v);

struct BoundWitness {
  long index = 0;
  padic::ExtendedValuation v_x0 = 0;
  padic::ExtendedValuation v_other = 0;
  bool strict = false;
  bool identity_ok = true;  // the exact closed-form rewriting used by the proof

  /// v_other - v_x0, or infinity.
  padic::ExtendedValuation margin() const;
};

struct BoundReport {
  Bound bound = Bound::general_below;
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho = 0;
  long rho_prime = 0;
  std::vector<BoundWitness> witnesses;
  Verdict verdict = Verdict::vacuous;
  std::string note;

  std::optional<padic::ExtendedValuation> min_margin() const;
};

/// Tuples outside the hypotheses come back vacuous with the reason in `note`.
BoundReport verify_bound(Bound bound, long p, long r, long alpha);

/// Carry counting against exact factorization, plus the floor(log_p a)
/// bound, for all 1 <= a <= a_max, 0 <= b <= a.
struct CarryReport {
  long p = 0;
  long a_max = 0;
  long pairs = 0;
  long bound_violations = 0;
  long disagreements = 0;
  long max_valuation = 0;
  std::optional<std::pair<long, long>> first_counterexample;

  bool holds() const { return bound_violations == 0 && disagreements == 0; }
};

/// One report per prime; the exact binomial rows are shared across primes.
std::vector<CarryReport> verify_carry_bound(const std::vector<long>& primes, long a_max);

struct IntegrityReport {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho_prime = 0;
  CVariant variant = CVariant::general;
  std::vector<Rational> c_prime;         // index l - l_min
  std::vector<Rational> c_double_prime;  // index j - l_min
  bool c_prime_integral = false;
  bool c_double_prime_integral = false;
  bool c_prime_identity = false;         // sum C'_j C((p-1)X + alpha, alpha - j) = C(R' - X, R')
  bool c_double_prime_identity = false;  // sum C''_j prod (X + (alpha - u)/(p-1)) = (X-1)...(X-R')
  bool flipped_exponent_identity = false;  // same with (p-1)^{j - alpha} in C''

  bool ok() const { return c_prime_integral && c_double_prime_integral && c_prime_identity && c_double_prime_identity; }
};

IntegrityReport integrality_checks(long p, long r, long alpha, CVariant variant);

/// Which alpha the general bounds sweep: up to floor(r/(p-1)) by default, or
/// up to r - p - 1 (every alpha with rho' >= 1) when extended.
enum class AlphaRange { standard, extended };

struct BoundTuple {
  long p = 0;
  long r = 0;
  long alpha = 0;
  CVariant variant = CVariant::general;
};

/// Hypothesis-admissible tuples, sorted by (p, r, alpha).
std::vector<BoundTuple> admissible_tuples(CVariant variant, const std::vector<long>& primes, long r_max,
                                          AlphaRange range = AlphaRange::standard);

struct SweepTuple {
  BoundTuple tuple;
  std::vector<BoundReport> bounds;  // the three bounds of the tuple's variant
  IntegrityReport integrality;
};

std::vector<SweepTuple> bound_sweep(const std::vector<long>& primes, long r_max, AlphaRange range, unsigned jobs);

}  // namespace slopekit::comb
