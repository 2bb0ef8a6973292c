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


#include <algorithm>

#include "doctest.h"
#include "slopekit/annihilator.hpp"
#include "slopekit/binomial_matrix.hpp"
#include "slopekit/bounds.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/padic.hpp"

using namespace slopekit;
using namespace slopekit::comb;

TEST_SUITE("lambda") {
  TEST_CASE("R = 0 is the constant one") {
    const auto t = lambda_coefficients(5, 0, 3);
    REQUIRE(t.by_offset.size() == 1);
    CHECK(t.at(3) == 1);
  }

  TEST_CASE("R = 1 closed forms") {
    for (long p : {5, 7, 11, 13}) {
      for (long alpha = 1; alpha <= 12; ++alpha) {
        const auto t = lambda_coefficients(p, 1, alpha);
        CHECK(t.at(alpha - 1) == Rational(-1) / (p - 1));
        CHECK(t.at(alpha) == Rational(p - 1 + alpha) / (p - 1));
      }
    }
  }

  TEST_CASE("both routes agree and the residual vanishes") {
    for (long p : {5, 7}) {
      for (long R = 0; R <= 8; ++R) {
        for (long alpha = R; alpha <= R + 6; ++alpha) {
          const auto a = lambda_coefficients(p, R, alpha);
          const auto b = lambda_by_interpolation(p, R, alpha);
          CHECK(a.by_offset == b.by_offset);
          CHECK(lambda_residual(a).is_zero());
        }
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(lambda_coefficients(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_coefficients(5, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_coefficients(6, 1, 2), std::invalid_argument);
  }

  TEST_CASE("constant table shape") {
    const auto c = c_constants(5, 20, 4, CVariant::general);
    CHECK(c.rho == 3);
    CHECK(c.rho_prime == 3);
    CHECK(c.values.size() == 4);
    CHECK(c.l_min() == 1);
    CHECK(c_constants_residual(c).is_zero());
    for (long l = c.l_min(); l <= c.l_max(); ++l) {
      CHECK(padic::valuation(c.at(l) / Rational(binomial(c.r, c.alpha - l)), 5) >= 0);
    }
    CHECK_THROWS_AS(c_constants(5, 20, 3, CVariant::general), std::invalid_argument);
    const auto rc = c_constants(7, 25, 3, CVariant::rho_case);
    CHECK(rc.rho_prime == 3);
    CHECK(c_constants_residual(rc).is_zero());
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("entries and trinomial revision") {
    const auto m = build_matrix_M(5, 20, 3);
    CHECK(m.cols.size() == 4);
    const auto row = std::find(m.rows.begin(), m.rows.end(), 2) - m.rows.begin();
    const auto col = std::find(m.cols.begin(), m.cols.end(), 1) - m.cols.begin();
    REQUIRE(row < m.row_count());
    CHECK(m.entries(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) == 48620);
    CHECK(binomial(18, 9) == 48620);
    CHECK(Rational(binomial(20, 11) * binomial(11, 2)) / Rational(binomial(20, 2)) == 48620);
    CHECK(trinomial_revision_holds(5, 20, 3, 2, 1));
  }

  TEST_CASE("power binomial determinants") {
    for (long p : {5, 7, 11}) {
      CHECK(determinant(power_binomial_block(p, 1)) == 1);
      CHECK(determinant(power_binomial_block(p, 2)) == p - 1);
      CHECK(determinant(power_binomial_block(p, 3)) == ipow(p - 1, 3));
      CHECK(determinant(power_binomial_block(p, 5)) == ipow(p - 1, 10));
    }
  }

  TEST_CASE("factorization and rank") {
    for (long gamma : {0, 3, 9}) {
      const auto rep = factor_and_rank_checks(7, 6, gamma);
      CHECK(rep.ok());
      CHECK(rep.rank_mod_p == 6);
    }
  }

  TEST_CASE("suite on a small grid") {
    for (long r = 1; r <= 60; ++r) {
      for (long a = 0; a <= rho_of(5, r); ++a) CHECK(check_matrix_suite(5, r, a).ok());
    }
  }
}

TEST_SUITE("annihilator") {
  TEST_CASE("vartheta basics") {
    const IndexedValues d{{0, 2}, {1, 3}, {2, -1}};
    CHECK(vartheta(d, 0, 5) == 4);
    const IndexedValues one{{1, 1}};
    for (long w = 0; w <= 6; ++w) CHECK(vartheta(one, w, 5) == Rational(binomial(4, w)));
  }

  TEST_CASE("interior system") {
    const auto sys = build_interior_annihilator(5, 20, 1);
    CHECK(sys.residual_zero);
    CHECK(vartheta(sys.row_values, 0, 5) == 0);
    const auto v = check_vartheta(sys);
    CHECK(v.vanishes_below_alpha);
    CHECK(v.exact_at_alpha);
    CHECK(v.bounded_in_window);
    CHECK(eps_cal_of(5, 26) == 2);
    CHECK(build_interior_annihilator(5, 26, 2).eps == 2);
  }

  TEST_CASE("rho-case system") {
    const auto sys = build_rho_annihilator(5, 15);
    CHECK(sys.rho == 2);
    CHECK(sys.residual_zero);
    const auto rc = check_rho_case(sys);
    CHECK(rc.scaled_equality);
    CHECK(rc.congruent);
    CHECK(rc.d0 != rc.vartheta_rho);
    CHECK_THROWS_AS(build_rho_annihilator(5, 16), std::invalid_argument);
  }

  TEST_CASE("row vanishing") {
    CHECK(verify_row_vanishing(5, 14, 3).holds);
    CHECK(verify_row_vanishing(7, 18, 3).holds);
    CHECK(verify_row_vanishing(7, 25, 3, CVariant::rho_case).holds);
  }
}

TEST_SUITE("bounds") {
  TEST_CASE("X values") {
    CHECK(x_value(5, 14, 3, 2, 0) == Rational(binomial(14, 3)));
    CHECK(x_value(5, 14, 3, 2, 1) == 0);  // C(1, 2) vanishes
  }

  TEST_CASE("carry bound") {
    const auto reps = verify_carry_bound({2, 3}, 300);
    for (const auto& r : reps) CHECK(r.holds());
    CHECK(reps[0].max_valuation == 8);
  }

  TEST_CASE("single tuples") {
    for (Bound b : {Bound::general_below, Bound::general_above, Bound::general_constants}) {
      const auto rep = verify_bound(b, 5, 14, 3);
      CHECK(rep.verdict != Verdict::fails);
    }
    CHECK(verify_bound(Bound::general_constants, 5, 14, 3).verdict == Verdict::holds);
    const auto off = verify_bound(Bound::rho_above, 5, 14, 3);
    CHECK(off.verdict == Verdict::vacuous);
    CHECK_FALSE(off.note.empty());
    for (Bound b : {Bound::rho_below, Bound::rho_above, Bound::rho_constants}) {
      CHECK(verify_bound(b, 7, 25, 3).verdict != Verdict::fails);
    }
  }

  TEST_CASE("constants start at l = 1 in the rho case") {
    const auto rep = verify_bound(Bound::rho_constants, 7, 25, 3);
    REQUIRE_FALSE(rep.witnesses.empty());
    CHECK(rep.witnesses.front().index == 1);
  }

  TEST_CASE("bound names round-trip") {
    for (Bound b : all_bounds()) CHECK(parse_bound(to_string(b)) == b);
    CHECK_FALSE(parse_bound("nope"));
  }

  TEST_CASE("integrality") {
    CHECK(integrality_checks(5, 14, 3, CVariant::general).ok());
    CHECK(integrality_checks(7, 25, 3, CVariant::rho_case).ok());
  }

  TEST_CASE("small sweep") {
    const auto sw = bound_sweep({5, 7}, 80, AlphaRange::extended, 2);
    CHECK_FALSE(sw.empty());
    for (const auto& s : sw) {
      for (const auto& l : s.bounds) CHECK(l.verdict != Verdict::fails);
      CHECK(s.integrality.ok());
    }
  }
}
