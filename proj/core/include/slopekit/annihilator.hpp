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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/arith.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/padic.hpp"
#include "slopekit/polynomial.hpp"

namespace slopekit::comb {

using IndexedValues = std::map<long, Rational>;

/// sum_i D_i C(i(p-1), w); negative i uses the falling-factorial binomial.
Rational vartheta(const IndexedValues& d, long w, long p);

/// eps_cal for weight k = r + 2, i.e. floor(log_p(r + 1)).
long eps_cal_of(long p, long r);

/// Solution of the square system on the interior rows of M restricted to
/// its right block, with right side p^eps at row u and 0 elsewhere.
struct InteriorSolution {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long u = 0;
  long eps = 0;
  IndexedValues constants;  // l -> C_l(r, u), right-block columns only
  bool residual_zero = false;
};

/// nullopt when the right block is singular over Q (a finding, not a crash).
std::optional<InteriorSolution> solve_interior_system(long p, long r, long alpha, long u);

enum class AnnihilatorTarget { theta_interior, rho_case };

struct AnnihilatorSystem {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho = 0;
  long eps = 0;
  AnnihilatorTarget target = AnnihilatorTarget::theta_interior;
  IndexedValues column_constants;  // C_l over [alpha - rho, alpha]
  IndexedValues boundary_values;   // D'_i on the boundary rows
  IndexedValues row_values;        // D_i(r), nonzero entries only
  HomPoly lhs{0};
  HomPoly rhs{0};
  bool residual_zero = false;
  bool constants_integral = false;        // v_p(C_l) >= 0
  bool scaled_constants_integral = false;  // v_p(C_l / C(r, alpha - l)) >= 0
};

/// Interior annihilator with right side p^eps theta^alpha x^{p-1} y^{...};
/// needs 0 <= alpha <= rho - 1.
AnnihilatorSystem build_interior_annihilator(long p, long r, long alpha);

struct VarthetaReport {
  long window_end = 0;                      // last w examined
  bool vanishes_below_alpha = false;        // w < alpha
  padic::ExtendedValuation at_alpha = 0;    // v_p(vartheta_alpha)
  bool exact_at_alpha = false;              // == eps
  bool bounded_in_window = false;           // v >= eps for alpha <= w <= window_end
  std::string failure;
};

/// Checks the vartheta claims for row_values; window_end defaults to 2 rho.
VarthetaReport check_vartheta(const AnnihilatorSystem& sys, std::optional<long> window_end = std::nullopt);

/// Right side p^eps theta^rho y^{p-2}; needs r - rho (p + 1) = p - 2.
AnnihilatorSystem build_rho_annihilator(long p, long r);

struct RhoCaseReport {
  Rational d0;
  Rational vartheta_rho;
  bool scaled_equality = false;  // D_0 (1 - p)^rho == vartheta_rho
  bool congruent = false;        // v_p(D_0 - vartheta_rho) > v_p(D_0)
};

RhoCaseReport check_rho_case(const AnnihilatorSystem& sys);

/// The double sum over rows i in [1, rho'] of C_l C(r - alpha + l, i(p-1) + l)
/// with C_l of the given variant; holds iff every row sum is zero.
struct RowVanishingReport {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho_prime = 0;
  long rows_checked = 0;
  bool holds = false;
  std::optional<long> first_nonzero_row;
};

RowVanishingReport verify_row_vanishing(long p, long r, long alpha, CVariant variant = CVariant::general);

}  // namespace slopekit::comb
