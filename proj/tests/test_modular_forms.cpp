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
#include "slopekit/modular_forms.hpp"
#include "slopekit/newton.hpp"
#include "slopekit/padic.hpp"

using namespace slopekit;
using namespace slopekit::mf;

TEST_SUITE("modular_forms") {
  TEST_CASE("Bernoulli numbers") {
    const auto b = bernoulli_numbers(12);
    CHECK(b[1] == Rational(-1) / 2);
    CHECK(b[2] == Rational(1) / 6);
    CHECK(b[3] == 0);
    CHECK(b[12] == Rational(-691) / 2730);
  }

  TEST_CASE("Eisenstein series") {
    const auto e4 = eisenstein(4, 4);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
    CHECK(e4[3] == 6720);
    const auto e6 = eisenstein(6, 4);
    CHECK(e6[1] == -504);
    CHECK(e6[2] == -16632);
    CHECK(e6[3] == -122976);
    CHECK(e4.is_integral());
    CHECK_FALSE(eisenstein(12, 3).is_integral());
    CHECK_THROWS_AS(eisenstein(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(2, 3), std::invalid_argument);
  }

  TEST_CASE("Ramanujan tau") {
    const auto d = delta(14);
    const long tau[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944, -577738};
    for (std::size_t n = 0; n < 14; ++n) CHECK(d[n] == tau[n]);
    CHECK(d.is_cusp());
  }

  TEST_CASE("Delta from Eisenstein series") {
    const std::size_t prec = 80;
    const auto e4 = eisenstein(4, prec);
    const auto e6 = eisenstein(6, prec);
    CHECK(Rational(1728) * delta(prec) == e4 * e4 * e4 - e6 * e6);
  }

  TEST_CASE("dimensions") {
    CHECK(dim_cusp(12, 1) == 1);
    for (long k = 0; k < 12; k += 2) CHECK(dim_cusp_level1(k) == 0);
    CHECK(dim_cusp_level1(14) == 0);
    CHECK(dim_cusp_level1(24) == 2);
    CHECK(dim_cusp_level1(26) == 1);
    CHECK(dim_cusp(2, 59) == 5);
    CHECK(dim_cusp(2, 11) == 1);
    CHECK(dim_cusp(2, 2) == 0);
    CHECK(dim_cusp(12, 5) == 5);
    CHECK(dim_cusp(12, 2) == 2);
    CHECK(dim_cusp(12, 3) == 3);
    CHECK_THROWS_AS(dim_cusp(13, 5), std::invalid_argument);
  }

  TEST_CASE("Miller basis") {
    const auto b12 = miller_basis(12, 10);
    REQUIRE(b12.size() == 1);
    CHECK(b12[0] == delta(10));
    const auto b16 = miller_basis(16, 10);
    REQUIRE(b16.size() == 1);
    CHECK(b16[0][2] == 216);
    const auto b48 = miller_basis(48, 12);
    REQUIRE(b48.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(b48[i].is_integral());
      for (std::size_t j = 1; j <= 4; ++j) CHECK(b48[i][j] == (i + 1 == j ? 1 : 0));
    }
    CHECK_THROWS_AS(miller_basis(48, 4), std::invalid_argument);
  }

  TEST_CASE("Hecke matrices") {
    CHECK(hecke_matrix(2, 12).entries(0, 0) == -24);
    CHECK(hecke_matrix(5, 12).entries(0, 0) == 4830);
    const auto h = hecke_matrix(2, 24);
    CHECK(h.entries(0, 0) + h.entries(1, 1) == 1080);
    CHECK(charpoly(h.entries) == std::vector<Integer>{-20468736, -1080, 1});
    for (long k : {24, 36, 48}) {
      const auto a = hecke_matrix(2, k).entries;
      const auto b = hecke_matrix(3, k).entries;
      CHECK(a * b == b * a);
    }
  }

  TEST_CASE("Hecke recursion at p on one-dimensional spaces") {
    for (long k : {12, 16, 18, 20, 22, 26}) {
      for (long p : {2, 3, 5}) {
        const auto f = miller_basis(k, static_cast<std::size_t>(p * p + 1))[0];
        CHECK(f[static_cast<std::size_t>(p * p)] == f[static_cast<std::size_t>(p)] * f[static_cast<std::size_t>(p)] -
                                                         Rational(ipow(p, static_cast<unsigned long>(k - 1))));
      }
    }
  }

  TEST_CASE("slopes") {
    CHECK(slopes(2, 12) == std::vector<Rational>{3});
    CHECK(slopes(5, 12) == std::vector<Rational>{1});
    CHECK(slopes(13, 12) == std::vector<Rational>{0});
    const auto s59 = slopes(59, 16);
    REQUIRE(s59.size() == 1);
    CHECK(s59[0] >= 1);
    CHECK(slopes(5, 10).empty());
    for (long k = 12; k <= 60; k += 2) {
      const auto h = hecke_matrix(3, k);
      const auto s = slopes(h);
      CHECK(s.size() == h.dim);
      Rational sum = 0;
      for (const auto& x : s) {
        CHECK(x >= 0);
        CHECK(x <= k - 1);
        sum += x;
      }
      if (h.dim > 0) CHECK(sum == padic::valuation(determinant(h.entries), 3).value());
    }
  }
}
