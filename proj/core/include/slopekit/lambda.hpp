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

#include <vector>

#include "slopekit/arith.hpp"
#include "slopekit/polynomial.hpp"

namespace slopekit::comb {

/// Lambda_R(alpha, beta) for beta in [alpha - R, alpha]: the unique rationals
/// with
///   sum_beta Lambda_R(alpha, beta) C((p-1)X + alpha, alpha - beta) = C(R - X, R).
struct LambdaTable {
  long p = 0;
  long R = 0;
  long alpha = 0;
  std::vector<Rational> by_offset;  // index m = alpha - beta

  const Rational& at(long beta) const;
};

/// Coefficient matching in the monomial basis of X, solved top-down (the
/// system is triangular with leading coefficients (p-1)^m / m!).
LambdaTable lambda_coefficients(long p, long R, long alpha);

/// Same table via interpolation at the nodes X = (s - alpha)/(p - 1),
/// s = 0..R, where the basis polynomials become C(s, m). Integer arithmetic
/// throughout, then one division; O(R^2).
LambdaTable lambda_by_interpolation(long p, long R, long alpha);

/// Left side minus right side of the defining identity, expanded in X.
QPoly lambda_residual(const LambdaTable& table);

enum class CVariant { general, rho_case };

/// C_l = Lambda_{R'}(alpha, l) C(r, alpha - l) for l in [alpha - R', alpha],
/// where R' = ceil((r - alpha)/p) - 1 (general) or rho (rho_case, which needs
/// r = rho (p + 1) + 1 and alpha = rho).
struct CConstants {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho = 0;
  long rho_prime = 0;
  CVariant variant = CVariant::general;
  LambdaTable lambda;
  std::vector<Rational> values;  // index l - l_min()

  long l_min() const { return alpha - rho_prime; }
  long l_max() const { return alpha; }
  const Rational& at(long l) const;
};

/// ceil((r - alpha)/p) - 1.
long rho_prime(long p, long r, long alpha);

/// rho = floor((r + 1)/(p + 1)).
long rho_of(long p, long r);

CConstants c_constants(long p, long r, long alpha, CVariant variant);

/// sum_l C_l C(r, alpha - l)^{-1} C((p-1)X + alpha, alpha - l) - C(R' - X, R').
QPoly c_constants_residual(const CConstants& c);

}  // namespace slopekit::comb
