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


#include "doctest.h"
#include "slopekit/matrix.hpp"
#include "slopekit/polynomial.hpp"

using namespace slopekit;

TEST_SUITE("algebra") {
  TEST_CASE("QPoly arithmetic and binomial polynomials") {
    const QPoly x = QPoly::linear(1, 0);
    CHECK((x * x - QPoly::monomial(1, 2)).is_zero());
    const QPoly c = QPoly::binomial_of_linear(4, 3, 2);  // C(4X + 3, 2)
    for (long v = 0; v < 6; ++v) CHECK(c(Rational(v)) == Rational(binomial(4 * v + 3, 2)));
    CHECK(QPoly::binomial_of_linear(2, 1, 0) == QPoly::constant(1));
  }

  TEST_CASE("HomPoly theta") {
    const HomPoly th = HomPoly::theta(5);  // x y^5 - x^5 y
    CHECK(th.coeff(1) == 1);
    CHECK(th.coeff(5) == -1);
    const HomPoly th2 = th.pow(2);
    CHECK(th2.coeff(2) == 1);
    CHECK(th2.coeff(6) == -2);
    CHECK(th2.coeff(10) == 1);
  }

  TEST_CASE("determinants agree across routes") {
    IntMatrix m(3, 3);
    const long vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = vals[i][j];
    }
    CHECK(determinant(m) == 4);
    CHECK(determinant(to_rational(m)) == 4);
  }

  TEST_CASE("solve and rank mod p") {
    RatMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    const auto x = solve(a, {5, 6});
    REQUIRE(x);
    CHECK((*x)[0] == -4);
    CHECK((*x)[1] == Rational(9) / 2);
    CHECK(rank_mod_p(a, 2) == 1);
    CHECK(rank_mod_p(a, 5) == 2);
    RatMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    CHECK_FALSE(solve(s, {1, 1}));
  }

  TEST_CASE("characteristic polynomial") {
    IntMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    // x^2 - 5x - 2
    CHECK(charpoly(m) == std::vector<Integer>{-2, -5, 1});
  }
}
