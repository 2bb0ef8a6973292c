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


#include "slopekit/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "slopekit/parallel.hpp"

namespace slopekit::comb {

using padic::ExtendedValuation;
using padic::valuation;

Rational x_value(long p, long r, long alpha, long rho_prime, long i) {
  return rpow(p, -i * (p - 1)) * Rational(binomial(r, i * (p - 1) + alpha) * binomial(rho_prime - i, rho_prime));
}

Rational x_star_value(long p, long r, long alpha, long rho_prime, long i) {
  return rpow(p, i * (p - 1) + 2 * alpha - r) *
         Rational(binomial(r, i * (p - 1) + alpha) * binomial(rho_prime - i, rho_prime));
}

std::string to_string(Bound b) {
  switch (b) {
    case Bound::general_below:
      return "general-below";
    case Bound::general_above:
      return "general-above";
    case Bound::general_constants:
      return "general-constants";
    case Bound::rho_below:
      return "rho-below";
    case Bound::rho_above:
      return "rho-above";
    case Bound::rho_constants:
      return "rho-constants";
  }
  return "?";
}

std::optional<Bound> parse_bound(const std::string& name) {
  for (Bound b : all_bounds()) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

CVariant variant_of(Bound b) {
  switch (b) {
    case Bound::general_below:
    case Bound::general_above:
    case Bound::general_constants:
      return CVariant::general;
    default:
      return CVariant::rho_case;
  }
}

const std::vector<Bound>& all_bounds() {
  static const std::vector<Bound> all{Bound::general_below, Bound::general_above, Bound::general_constants,
                                      Bound::rho_below,     Bound::rho_above,     Bound::rho_constants};
  return all;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::vacuous:
      return "vacuous";
  }
  return "?";
}

ExtendedValuation BoundWitness::margin() const {
  if (v_other.is_infinite()) return ExtendedValuation::infinity();
  if (v_x0.is_infinite()) throw std::logic_error("X_0 is zero");
  return ExtendedValuation(v_other.value() - v_x0.value());
}

std::optional<ExtendedValuation> BoundReport::min_margin() const {
  std::optional<ExtendedValuation> out;
  for (const auto& w : witnesses) {
    const auto m = w.margin();
    if (!out || m < *out) out = m;
  }
  return out;
}

namespace {

Rational falling(long x, long n) { return Rational(falling_factorial(Integer(x), n)); }

struct Context {
  long p;
  long r;
  long alpha;
  long rho;
  long rho_prime;
  CVariant variant;
  const CConstants* constants;  // needed only for the C_l bounds
};

BoundWitness make_witness(long index, const Rational& x0, const Rational& other, long p) {
  BoundWitness w;
  w.index = index;
  w.v_x0 = valuation(x0, p);
  w.v_other = valuation(other, p);
  w.strict = w.v_x0 < w.v_other;
  return w;
}

// i < 0 with i(p-1) + alpha >= 0; j = -i.
void check_negative_rows(const Context& c, BoundReport& rep) {
  const Rational x0 = x_value(c.p, c.r, c.alpha, c.rho_prime, 0);
  const Rational binom_r_alpha(binomial(c.r, c.alpha));
  for (long j = 1; c.alpha - j * (c.p - 1) >= 0; ++j) {
    const long i = -j;
    const Rational xi = x_value(c.p, c.r, c.alpha, c.rho_prime, i);
    BoundWitness w = make_witness(i, x0, xi, c.p);
    const long n = j * (c.p - 1);
    const Rational direct = rpow(c.p, n) * Rational(binomial(c.r, c.alpha - n) * binomial(c.rho_prime + j, c.rho_prime));
    const Rational via_ratio = rpow(c.p, n) * binom_r_alpha * falling(c.alpha, n) / falling(c.r - c.alpha + n, n) *
                               Rational(binomial(c.rho_prime + j, j));
    w.identity_ok = (x0 == binom_r_alpha) && (xi == direct) && (xi == via_ratio);
    rep.witnesses.push_back(w);
  }
}

// Rows above the window; the star variant.
void check_upper_rows(const Context& c, long i_first, BoundReport& rep) {
  const Rational x0 = x_value(c.p, c.r, c.alpha, c.rho_prime, 0);
  const Rational binom_r_alpha(binomial(c.r, c.alpha));
  for (long i = i_first; i * (c.p - 1) + c.alpha <= c.r; ++i) {
    const Rational star = x_star_value(c.p, c.r, c.alpha, c.rho_prime, i);
    BoundWitness w = make_witness(i, x0, star, c.p);
    const long j = i * (c.p - 1) + 2 * c.alpha - c.r;
    const Integer gen = binomial(c.rho_prime - i, c.rho_prime);
    const Integer sign = (c.rho_prime % 2 == 0) ? 1 : -1;
    bool ok = (j > 0 && j <= c.alpha);
    ok = ok && (gen == sign * binomial(i - 1, c.rho_prime));
    const Rational via_ratio =
        rpow(c.p, j) * binom_r_alpha * falling(c.alpha, j) / falling(c.r - c.alpha + j, j) * Rational(gen);
    ok = ok && (star == via_ratio);
    if (c.variant == CVariant::rho_case) {
      // Fully expanded form; the sign is (-1)^rho from C(rho - i, rho).
      ok = ok && (j >= c.p - 2 && j <= c.rho);
      const long top = c.rho * c.p + j + 1;
      const Rational expanded = Rational(sign) * rpow(c.p, j) * binom_r_alpha *
                                falling(i - 1, i - c.rho + j - 1) /
                                (falling(top, j) * Rational(factorial(i - c.rho - 1)));
      ok = ok && (star == expanded);
    }
    w.identity_ok = ok;
    rep.witnesses.push_back(w);
  }
}

void check_constants(const Context& c, long l_first, BoundReport& rep) {
  const CConstants& k = *c.constants;
  const Rational x0 = x_value(c.p, c.r, c.alpha, c.rho_prime, 0);
  const Rational binom_r_alpha(binomial(c.r, c.alpha));
  for (long l = l_first; l <= k.l_max(); ++l) {
    const Rational cl_pl = k.at(l) * rpow(c.p, l);
    BoundWitness w = make_witness(l, x0, cl_pl, c.p);
    const Rational c_prime = k.at(l) / Rational(binomial(c.r, c.alpha - l));
    const Rational via_ratio =
        c_prime * binom_r_alpha * falling(c.alpha, l) / falling(c.r - c.alpha + l, l) * rpow(c.p, l);
    w.identity_ok = (cl_pl == via_ratio);
    rep.witnesses.push_back(w);
  }
}

void finish(BoundReport& rep) {
  if (rep.witnesses.empty()) {
    rep.verdict = Verdict::vacuous;
    if (rep.note.empty()) rep.note = "empty index range";
    return;
  }
  rep.verdict = Verdict::holds;
  for (const auto& w : rep.witnesses) {
    if (!w.strict || !w.identity_ok) rep.verdict = Verdict::fails;
  }
}

BoundReport verify_in_context(Bound bound, const Context& c) {
  BoundReport rep;
  rep.bound = bound;
  rep.p = c.p;
  rep.r = c.r;
  rep.alpha = c.alpha;
  rep.rho = c.rho;
  rep.rho_prime = c.rho_prime;
  switch (bound) {
    case Bound::general_below:
    case Bound::rho_below:
      check_negative_rows(c, rep);
      break;
    case Bound::general_above:
      check_upper_rows(c, c.rho_prime + 1, rep);
      break;
    case Bound::rho_above:
      // i(p-1) + rho > rho p  <=>  i > rho.
      check_upper_rows(c, c.rho + 1, rep);
      break;
    case Bound::general_constants:
      check_constants(c, c.constants->l_min(), rep);
      break;
    case Bound::rho_constants:
      check_constants(c, 1, rep);
      break;
  }
  finish(rep);
  return rep;
}

std::optional<std::string> hypothesis_failure(Bound bound, long p, long r, long alpha) {
  if (!is_prime(p) || p <= 3) return "needs a prime p > 3";
  const long rho = rho_of(p, r);
  if (variant_of(bound) == CVariant::general) {
    if (alpha <= rho) return "needs alpha > rho";
    if (rho_prime(p, r, alpha) < 1) return "needs rho' >= 1";
    return std::nullopt;
  }
  if (r != rho * (p + 1) + 1 || alpha != rho) return "needs r = rho (p + 1) + 1 and alpha = rho";
  if (rho < 1) return "needs rho >= 1";
  return std::nullopt;
}

Context make_context(long p, long r, long alpha, CVariant variant, const CConstants* constants) {
  const long rho = rho_of(p, r);
  const long rp = (variant == CVariant::general) ? rho_prime(p, r, alpha) : rho;
  return Context{p, r, alpha, rho, rp, variant, constants};
}

IntegrityReport integrality_from(const CConstants& k) {
  IntegrityReport out;
  out.p = k.p;
  out.r = k.r;
  out.alpha = k.alpha;
  out.rho_prime = k.rho_prime;
  out.variant = k.variant;
  const long p = k.p;
  const long rp = k.rho_prime;
  const Integer sign = (rp % 2 == 0) ? 1 : -1;
  std::vector<Rational> flipped;
  for (long j = k.l_min(); j <= k.l_max(); ++j) {
    const Rational c1 = k.at(j) / Rational(binomial(k.r, k.alpha - j));
    const long d = k.alpha - j;
    const Rational coeff = Rational(sign * factorial(rp)) / Rational(factorial(d));
    out.c_prime.push_back(c1);
    out.c_double_prime.push_back(coeff * rpow(p - 1, d) * c1);
    flipped.push_back(coeff * Rational(1) / rpow(p - 1, d) * c1);
  }
  out.c_prime_integral = std::all_of(out.c_prime.begin(), out.c_prime.end(),
                                     [p](const Rational& q) { return q == 0 || valuation(q, p) >= 0; });
  out.c_double_prime_integral = std::all_of(out.c_double_prime.begin(), out.c_double_prime.end(),
                                            [p](const Rational& q) { return q == 0 || valuation(q, p) >= 0; });

  // Both sides of each identity have degree <= rho', so agreement at
  // rho' + 1 distinct points is equality of polynomials.
  out.c_prime_identity = true;
  out.c_double_prime_identity = true;
  out.flipped_exponent_identity = true;
  for (long t = 0; t <= rp; ++t) {
    Rational lhs1 = 0;
    for (long j = k.l_min(); j <= k.l_max(); ++j) {
      lhs1 += out.c_prime[static_cast<std::size_t>(j - k.l_min())] *
              Rational(binomial((p - 1) * t + k.alpha, k.alpha - j));
    }
    if (lhs1 != Rational(binomial(rp - t, rp))) out.c_prime_identity = false;

    std::vector<Rational> prefix(static_cast<std::size_t>(rp + 1));
    prefix[0] = 1;
    for (long n = 1; n <= rp; ++n) {
      prefix[n] = prefix[n - 1] * (Rational(t) + Rational(k.alpha - (n - 1)) / Rational(p - 1));
    }
    Rational lhs2 = 0;
    Rational lhs_flipped = 0;
    for (long j = k.l_min(); j <= k.l_max(); ++j) {
      const std::size_t idx = static_cast<std::size_t>(j - k.l_min());
      lhs2 += out.c_double_prime[idx] * prefix[static_cast<std::size_t>(k.alpha - j)];
      lhs_flipped += flipped[idx] * prefix[static_cast<std::size_t>(k.alpha - j)];
    }
    Rational rhs2 = 1;
    for (long s = 1; s <= rp; ++s) rhs2 *= t - s;
    if (lhs2 != rhs2) out.c_double_prime_identity = false;
    if (lhs_flipped != rhs2) out.flipped_exponent_identity = false;
  }
  return out;
}

}  // namespace

ValuationWitness valuation_witnesses(long p, long r, long alpha, long index, CVariant variant) {
  const CConstants k = c_constants(p, r, alpha, variant);
  ValuationWitness out;
  out.index = index;
  out.x0 = x_value(p, r, alpha, k.rho_prime, 0);
  out.xi = x_value(p, r, alpha, k.rho_prime, index);
  out.xi_star = x_star_value(p, r, alpha, k.rho_prime, index);
  if (index >= k.l_min() && index <= k.l_max()) out.cl_pl = k.at(index) * rpow(p, index);
  return out;
}

BoundReport verify_bound(Bound bound, long p, long r, long alpha) {
  if (auto why = hypothesis_failure(bound, p, r, alpha)) {
    BoundReport rep;
    rep.bound = bound;
    rep.p = p;
    rep.r = r;
    rep.alpha = alpha;
    rep.verdict = Verdict::vacuous;
    rep.note = *why;
    return rep;
  }
  const CVariant variant = variant_of(bound);
  std::optional<CConstants> k;
  if (bound == Bound::general_constants || bound == Bound::rho_constants) k = c_constants(p, r, alpha, variant);
  return verify_in_context(bound, make_context(p, r, alpha, variant, k ? &*k : nullptr));
}

std::vector<CarryReport> verify_carry_bound(const std::vector<long>& primes, long a_max) {
  std::vector<CarryReport> out;
  for (long p : primes) {
    require_prime(p);
    CarryReport rep;
    rep.p = p;
    rep.a_max = a_max;
    out.push_back(rep);
  }
  std::vector<Integer> row = {1};
  for (long a = 1; a <= a_max; ++a) {
    std::vector<Integer> next(static_cast<std::size_t>(a + 1));
    next[0] = 1;
    next[static_cast<std::size_t>(a)] = 1;
    for (long b = 1; b < a; ++b) next[b] = row[b - 1] + row[b];
    row = std::move(next);
    for (auto& rep : out) {
      const long bound = floor_log(rep.p, a);
      for (long b = 0; b <= a; ++b) {
        const long carries = padic::binomial_valuation(a, b, rep.p);
        const long direct = padic::valuation_count(row[b], rep.p);
        ++rep.pairs;
        rep.max_valuation = std::max(rep.max_valuation, direct);
        const bool agree = carries == direct;
        const bool bounded = direct <= bound;
        if (!agree) ++rep.disagreements;
        if (!bounded) ++rep.bound_violations;
        if ((!agree || !bounded) && !rep.first_counterexample) rep.first_counterexample = std::make_pair(a, b);
      }
    }
  }
  return out;
}

IntegrityReport integrality_checks(long p, long r, long alpha, CVariant variant) {
  return integrality_from(c_constants(p, r, alpha, variant));
}

std::vector<BoundTuple> admissible_tuples(CVariant variant, const std::vector<long>& primes, long r_max,
                                          AlphaRange range) {
  std::vector<BoundTuple> out;
  std::vector<long> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  for (long p : sorted) {
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("bound sweeps need primes p > 3");
    if (variant == CVariant::general) {
      for (long r = 0; r <= r_max; ++r) {
        const long rho = rho_of(p, r);
        const long alpha_max = (range == AlphaRange::standard) ? r / (p - 1) : r - p - 1;
        for (long alpha = rho + 1; alpha <= alpha_max; ++alpha) {
          if (rho_prime(p, r, alpha) >= 1) out.push_back({p, r, alpha, variant});
        }
      }
    } else {
      for (long rho = 1; rho * (p + 1) + 1 <= r_max; ++rho) out.push_back({p, rho * (p + 1) + 1, rho, variant});
    }
  }
  return out;
}

std::vector<SweepTuple> bound_sweep(const std::vector<long>& primes, long r_max, AlphaRange range, unsigned jobs) {
  std::vector<BoundTuple> tuples = admissible_tuples(CVariant::general, primes, r_max, range);
  const auto rho_tuples = admissible_tuples(CVariant::rho_case, primes, r_max, range);
  tuples.insert(tuples.end(), rho_tuples.begin(), rho_tuples.end());
  std::sort(tuples.begin(), tuples.end(), [](const BoundTuple& a, const BoundTuple& b) {
    return std::tie(a.p, a.r, a.alpha) < std::tie(b.p, b.r, b.alpha);
  });
  return parallel_map(tuples.size(), jobs, [&](std::size_t n) {
    const BoundTuple& t = tuples[n];
    const CConstants k = c_constants(t.p, t.r, t.alpha, t.variant);
    const Context ctx = make_context(t.p, t.r, t.alpha, t.variant, &k);
    SweepTuple out;
    out.tuple = t;
    for (Bound b : all_bounds()) {
      if (variant_of(b) == t.variant) out.bounds.push_back(verify_in_context(b, ctx));
    }
    out.integrality = integrality_from(k);
    return out;
  });
}

}  // namespace slopekit::comb
