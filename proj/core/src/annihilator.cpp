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


#include "slopekit/annihilator.hpp"

#include <algorithm>
#include <stdexcept>

#include "slopekit/binomial_matrix.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/matrix.hpp"

namespace slopekit::comb {

using padic::valuation;

Rational vartheta(const IndexedValues& d, long w, long p) {
  if (w < 0) throw std::invalid_argument("vartheta needs w >= 0");
  Rational acc = 0;
  for (const auto& [i, value] : d) {
    if (value != 0) acc += value * Rational(binomial(i * (p - 1), w));
  }
  return acc;
}

long eps_cal_of(long p, long r) { return floor_log(p, r + 1); }

namespace {

std::vector<Rational> solve_right_block(const BinomialMatrix& m, const std::vector<Rational>& rhs) {
  const auto solution = solve(to_rational(m.right_block()), rhs);
  if (!solution) {
    throw std::domain_error("right block of M is singular at (p=" + std::to_string(m.p) + ", r=" +
                            std::to_string(m.r) + ", alpha=" + std::to_string(m.alpha) + ")");
  }
  return *solution;
}

Rational row_sum(const BinomialMatrix& m, std::size_t row, const IndexedValues& constants) {
  Rational acc = 0;
  for (std::size_t b = 0; b < m.cols.size(); ++b) {
    auto it = constants.find(m.cols[b]);
    if (it != constants.end() && it->second != 0) acc += it->second * Rational(m.entries(row, b));
  }
  return acc;
}

AnnihilatorSystem build_with_rhs(long p, long r, long alpha, HomPoly rhs, AnnihilatorTarget target) {
  const BinomialMatrix m = build_matrix_M(p, r, alpha);
  AnnihilatorSystem sys;
  sys.p = p;
  sys.r = r;
  sys.alpha = alpha;
  sys.rho = m.rho;
  sys.eps = eps_cal_of(p, r);
  sys.target = target;
  sys.rhs = std::move(rhs);

  for (long j : m.cols) sys.column_constants[j] = 0;
  if (m.row_count() > 0) {
    std::vector<Rational> b;
    for (long i : m.rows) b.push_back(sys.rhs.coeff(i * (p - 1) + alpha));
    const auto solution = solve_right_block(m, b);
    const auto cols = m.right_block_cols();
    for (std::size_t c = 0; c < cols.size(); ++c) sys.column_constants[cols[c]] = solution[c];
  }

  sys.lhs = HomPoly(r);
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    sys.lhs.add_to(m.rows[a] * (p - 1) + alpha, row_sum(m, a, sys.column_constants));
  }
  const long i_lo = ceil_div(-alpha, p - 1);
  const long i_hi = floor_div(r - alpha, p - 1);
  for (long i = i_lo; i <= i_hi; ++i) {
    if (std::binary_search(m.rows.begin(), m.rows.end(), i)) continue;
    const Rational& value = sys.rhs.coeff(i * (p - 1) + alpha);
    sys.boundary_values[i] = value;
    sys.lhs.add_to(i * (p - 1) + alpha, value);
  }
  sys.residual_zero = (sys.lhs == sys.rhs);

  for (long i = i_lo; i <= i_hi; ++i) {
    const Rational& value = sys.lhs.coeff(i * (p - 1) + alpha);
    if (value != 0) sys.row_values[i] = value;
  }

  sys.constants_integral = true;
  sys.scaled_constants_integral = true;
  for (const auto& [l, c] : sys.column_constants) {
    if (c == 0) continue;
    if (valuation(c, p) < 0) sys.constants_integral = false;
    if (valuation(c / Rational(binomial(r, alpha - l)), p) < 0) sys.scaled_constants_integral = false;
  }
  return sys;
}

}  // namespace

std::optional<InteriorSolution> solve_interior_system(long p, long r, long alpha, long u) {
  const BinomialMatrix m = build_matrix_M(p, r, alpha);
  auto where = std::find(m.rows.begin(), m.rows.end(), u);
  if (where == m.rows.end()) throw std::invalid_argument("u is not an interior row index");
  InteriorSolution out;
  out.p = p;
  out.r = r;
  out.alpha = alpha;
  out.u = u;
  out.eps = eps_cal_of(p, r);
  const Rational scale = rpow(p, out.eps);
  std::vector<Rational> b(m.rows.size());
  b[static_cast<std::size_t>(where - m.rows.begin())] = scale;
  const auto solution = solve(to_rational(m.right_block()), b);
  if (!solution) return std::nullopt;
  const auto cols = m.right_block_cols();
  for (std::size_t c = 0; c < cols.size(); ++c) out.constants[cols[c]] = (*solution)[c];
  out.residual_zero = true;
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    const Rational expected = (m.rows[a] == u) ? scale : Rational(0);
    if (row_sum(m, a, out.constants) != expected) out.residual_zero = false;
  }
  return out;
}

AnnihilatorSystem build_interior_annihilator(long p, long r, long alpha) {
  require_prime(p);
  const long rho = rho_of(p, r);
  if (alpha < 0 || alpha > rho - 1) throw std::invalid_argument("interior annihilator needs 0 <= alpha <= rho - 1");
  const long y_exponent = r - alpha * (p + 1) - (p - 1);
  HomPoly rhs = HomPoly::theta(p).pow(alpha) * HomPoly::monomial(p - 1, y_exponent, rpow(p, eps_cal_of(p, r)));
  return build_with_rhs(p, r, alpha, std::move(rhs), AnnihilatorTarget::theta_interior);
}

VarthetaReport check_vartheta(const AnnihilatorSystem& sys, std::optional<long> window_end) {
  VarthetaReport out;
  out.window_end = window_end.value_or(2 * sys.rho);
  out.vanishes_below_alpha = true;
  for (long w = 0; w < sys.alpha; ++w) {
    if (vartheta(sys.row_values, w, sys.p) != 0) {
      out.vanishes_below_alpha = false;
      if (out.failure.empty()) out.failure = "vartheta_" + std::to_string(w) + " != 0";
    }
  }
  out.at_alpha = valuation(vartheta(sys.row_values, sys.alpha, sys.p), sys.p);
  out.exact_at_alpha = (out.at_alpha == padic::ExtendedValuation(sys.eps));
  if (!out.exact_at_alpha && out.failure.empty()) {
    out.failure = "v(vartheta_alpha) = " + out.at_alpha.str() + " != eps = " + std::to_string(sys.eps);
  }
  out.bounded_in_window = true;
  for (long w = sys.alpha; w <= out.window_end; ++w) {
    const auto v = valuation(vartheta(sys.row_values, w, sys.p), sys.p);
    if (v < padic::ExtendedValuation(sys.eps)) {
      out.bounded_in_window = false;
      if (out.failure.empty()) out.failure = "v(vartheta_" + std::to_string(w) + ") = " + v.str() + " < eps";
    }
  }
  return out;
}

AnnihilatorSystem build_rho_annihilator(long p, long r) {
  require_prime(p);
  const long rho = rho_of(p, r);
  if (r - rho * (p + 1) != p - 2) throw std::invalid_argument("rho annihilator needs r - rho (p + 1) = p - 2");
  HomPoly rhs = HomPoly::theta(p).pow(rho) * HomPoly::monomial(0, p - 2, rpow(p, eps_cal_of(p, r)));
  return build_with_rhs(p, r, rho, std::move(rhs), AnnihilatorTarget::rho_case);
}

RhoCaseReport check_rho_case(const AnnihilatorSystem& sys) {
  if (sys.target != AnnihilatorTarget::rho_case) throw std::invalid_argument("check_rho_case needs a rho-case system");
  RhoCaseReport out;
  auto it = sys.row_values.find(0);
  out.d0 = (it == sys.row_values.end()) ? Rational(0) : it->second;
  out.vartheta_rho = vartheta(sys.row_values, sys.rho, sys.p);
  Rational factor = 1;
  for (long e = 0; e < sys.rho; ++e) factor *= 1 - sys.p;
  out.scaled_equality = (out.d0 * factor == out.vartheta_rho);
  out.congruent = valuation(out.d0 - out.vartheta_rho, sys.p) > valuation(out.d0, sys.p);
  return out;
}

RowVanishingReport verify_row_vanishing(long p, long r, long alpha, CVariant variant) {
  const CConstants c = c_constants(p, r, alpha, variant);
  RowVanishingReport out;
  out.p = p;
  out.r = r;
  out.alpha = alpha;
  out.rho_prime = c.rho_prime;
  out.holds = true;
  for (long i = 1; i <= c.rho_prime; ++i) {
    Rational acc = 0;
    for (long l = c.l_min(); l <= c.l_max(); ++l) acc += c.at(l) * Rational(binomial(r - alpha + l, i * (p - 1) + l));
    ++out.rows_checked;
    if (acc != 0) {
      out.holds = false;
      if (!out.first_nonzero_row) out.first_nonzero_row = i;
    }
  }
  return out;
}

}  // namespace slopekit::comb
