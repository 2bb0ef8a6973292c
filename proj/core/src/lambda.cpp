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


#include "slopekit/lambda.hpp"

#include <stdexcept>
#include <string>

namespace slopekit::comb {

namespace {

void check_lambda_args(long p, long R, long alpha) {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("Lambda tables need p > 3");
  if (R < 0) throw std::invalid_argument("Lambda tables need R >= 0");
  if (R > alpha) throw std::invalid_argument("Lambda tables need R <= alpha");
}

QPoly basis_poly(long p, long alpha, long m) { return QPoly::binomial_of_linear(p - 1, alpha, m); }

}  // namespace

const Rational& LambdaTable::at(long beta) const {
  const long m = alpha - beta;
  if (m < 0 || m > R) throw std::out_of_range("beta outside [alpha - R, alpha]");
  return by_offset[static_cast<std::size_t>(m)];
}

LambdaTable lambda_coefficients(long p, long R, long alpha) {
  check_lambda_args(p, R, alpha);
  std::vector<QPoly> basis;
  basis.reserve(static_cast<std::size_t>(R + 1));
  for (long m = 0; m <= R; ++m) basis.push_back(basis_poly(p, alpha, m));
  const QPoly target = QPoly::binomial_of_linear(-1, R, R);

  LambdaTable out{p, R, alpha, std::vector<Rational>(static_cast<std::size_t>(R + 1))};
  for (long m = R; m >= 0; --m) {
    Rational acc = target.coeff(m);
    for (long n = m + 1; n <= R; ++n) acc -= out.by_offset[static_cast<std::size_t>(n)] * basis[n].coeff(m);
    const Rational lead = basis[m].coeff(m);
    if (lead == 0) throw std::logic_error("singular Lambda system: zero leading coefficient");
    out.by_offset[static_cast<std::size_t>(m)] = acc / lead;
  }
  return out;
}

LambdaTable lambda_by_interpolation(long p, long R, long alpha) {
  check_lambda_args(p, R, alpha);
  // g(s) = (p-1)^R R! C(R - X_s, R) = prod_{v=1..R} (v (p-1) + alpha - s).
  std::vector<Integer> g(static_cast<std::size_t>(R + 1));
  for (long s = 0; s <= R; ++s) {
    Integer prod = 1;
    for (long v = 1; v <= R; ++v) prod *= v * (p - 1) + alpha - s;
    g[static_cast<std::size_t>(s)] = std::move(prod);
  }
  const Integer scale = ipow(p - 1, static_cast<unsigned long>(R)) * factorial(R);
  LambdaTable out{p, R, alpha, std::vector<Rational>(static_cast<std::size_t>(R + 1))};
  std::vector<Integer> row = {1};  // C(m, s), s = 0..m
  for (long m = 0; m <= R; ++m) {
    if (m > 0) {
      std::vector<Integer> next(static_cast<std::size_t>(m + 1));
      next[0] = 1;
      next[static_cast<std::size_t>(m)] = 1;
      for (long s = 1; s < m; ++s) next[s] = row[s - 1] + row[s];
      row = std::move(next);
    }
    Integer acc = 0;
    for (long s = 0; s <= m; ++s) {
      if ((m - s) % 2 == 0) {
        acc += row[s] * g[s];
      } else {
        acc -= row[s] * g[s];
      }
    }
    Rational value(acc, scale);
    value.canonicalize();
    out.by_offset[static_cast<std::size_t>(m)] = std::move(value);
  }
  return out;
}

QPoly lambda_residual(const LambdaTable& t) {
  QPoly lhs;
  for (long m = 0; m <= t.R; ++m) lhs += basis_poly(t.p, t.alpha, m) * t.by_offset[static_cast<std::size_t>(m)];
  return lhs - QPoly::binomial_of_linear(-1, t.R, t.R);
}

long rho_prime(long p, long r, long alpha) { return ceil_div(r - alpha, p) - 1; }

long rho_of(long p, long r) { return (r + 1) / (p + 1); }

const Rational& CConstants::at(long l) const {
  if (l < l_min() || l > l_max()) throw std::out_of_range("l outside [alpha - rho', alpha]");
  return values[static_cast<std::size_t>(l - l_min())];
}

CConstants c_constants(long p, long r, long alpha, CVariant variant) {
  require_prime(p);
  if (r < 0 || alpha < 0) throw std::invalid_argument("c_constants needs r, alpha >= 0");
  CConstants out;
  out.p = p;
  out.r = r;
  out.alpha = alpha;
  out.rho = rho_of(p, r);
  out.variant = variant;
  if (variant == CVariant::general) {
    if (alpha <= out.rho) throw std::invalid_argument("general C_l needs alpha > rho");
    out.rho_prime = rho_prime(p, r, alpha);
    if (out.rho_prime < 1) {
      throw std::invalid_argument("general C_l needs rho' >= 1 (r - alpha > p); got rho' = " +
                                  std::to_string(out.rho_prime));
    }
  } else {
    if (r != out.rho * (p + 1) + 1 || alpha != out.rho) {
      throw std::invalid_argument("rho-case C_l needs r = rho (p + 1) + 1 and alpha = rho");
    }
    out.rho_prime = out.rho;
  }
  out.lambda = lambda_by_interpolation(p, out.rho_prime, alpha);
  for (long l = out.l_min(); l <= alpha; ++l) {
    out.values.push_back(out.lambda.at(l) * Rational(binomial(r, alpha - l)));
  }
  return out;
}

QPoly c_constants_residual(const CConstants& c) {
  QPoly lhs;
  for (long l = c.l_min(); l <= c.l_max(); ++l) {
    const Rational scaled = c.at(l) / Rational(binomial(c.r, c.alpha - l));
    lhs += basis_poly(c.p, c.alpha, c.alpha - l) * scaled;
  }
  return lhs - QPoly::binomial_of_linear(-1, c.rho_prime, c.rho_prime);
}

}  // namespace slopekit::comb
