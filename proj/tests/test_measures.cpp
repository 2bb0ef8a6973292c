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
#include "slopekit/measures.hpp"
#include "slopekit/modular_forms.hpp"

using namespace slopekit;
using namespace slopekit::measure;

TEST_SUITE("measures") {
  TEST_CASE("oldform masses") {
    CHECK(supersingularity_measure(5, 12, false).masses == std::vector<Rational>{Rational(1) / 11, Rational(10) / 11});
    CHECK(supersingularity_measure(2, 12, false).masses == std::vector<Rational>{Rational(3) / 11, Rational(8) / 11});
    const auto m = supersingularity_measure(59, 16, false);
    REQUIRE(m.masses.size() == 2);
    CHECK(m.masses[0] + m.masses[1] == 1);
    CHECK(m.masses[0] > Rational(1) / 60);
    CHECK(m.is_symmetric());
  }

  using Pair = std::pair<Rational, Rational>;
  TEST_CASE("oldform pairs") {
    CHECK(oldform_pair(12, 1) == Pair(Rational(1), Rational(10)));
    CHECK(oldform_pair(12, 8) == Pair(Rational(11) / 2, Rational(11) / 2));
    CHECK(oldform_pair(12, Rational(11) / 2) == Pair(Rational(11) / 2, Rational(11) / 2));
  }

  TEST_CASE("newform atoms") {
    const auto m = supersingularity_measure(5, 12, true);
    CHECK(m.new_count == mf::dim_cusp(12, 5) - 2);
    CHECK(std::count(m.masses.begin(), m.masses.end(), Rational(5) / 11) == m.new_count);
    CHECK_FALSE(m.is_symmetric());
    CHECK(mass_in_middle(m, middle_interval_bound(5, 12)).count >= m.new_count);
  }

  TEST_CASE("support bound") {
    const auto b = middle_interval_bound(5, 26);
    CHECK(b.log_term == 2);
    CHECK(b.left_end == Rational(1) / 6 + Rational(2) / 25);
    CHECK(b.left_end + b.right_end == 1);
    CHECK(middle_interval_bound(101, 20).left_end == Rational(1) / 102);
  }

  TEST_CASE("middle counts") {
    CHECK(mass_in_middle(supersingularity_measure(5, 12, false), middle_interval_bound(5, 12)).count == 0);
    const auto empty = supersingularity_measure(5, 10, false);
    CHECK(empty.masses.empty());
    const auto e = mass_in_middle(empty, middle_interval_bound(5, 10));
    CHECK(e.count == 0);
    CHECK(e.fraction == 0);
    const auto mid = mass_in_middle(supersingularity_measure(59, 16, false), middle_interval_bound(59, 16));
    CHECK(mid.count == 2);
    CHECK(mid.fraction == 1);
    CHECK_THROWS_AS(mass_in_middle(empty, middle_interval_bound(7, 10)), std::invalid_argument);
  }

  TEST_CASE("shrinking the interval never raises the count") {
    const auto m = supersingularity_measure(59, 16, true);
    auto b = middle_interval_bound(59, 16);
    long last = mass_in_middle(m, b).count;
    for (int step = 0; step < 10; ++step) {
      b.left_end += Rational(1) / 40;
      b.right_end -= Rational(1) / 40;
      const long now = mass_in_middle(m, b).count;
      CHECK(now <= last);
      last = now;
    }
  }

  TEST_CASE("regularity") {
    const auto r5 = is_regular(5);
    CHECK(r5.regular);
    CHECK(r5.weights_checked.empty());
    const auto r13 = is_regular(13);
    CHECK(r13.regular);
    CHECK(r13.weights_checked == std::vector<long>{12});
    const auto r59 = is_regular(59);
    CHECK_FALSE(r59.regular);
    REQUIRE_FALSE(r59.witnesses.empty());
    CHECK(r59.witnesses.front().first == 16);
    CHECK(r59.witnesses.front().second >= 1);
  }

  TEST_CASE("profile and guard") {
    const auto prof = middle_mass_profile(7, 12, 40, false, 2);
    CHECK(prof.rows.size() == 15);
    CHECK_FALSE(prof.cutoff);
    for (const auto& row : prof.rows) CHECK(row.dim_old == 2 * mf::dim_cusp_level1(row.k));
    const auto cut = middle_mass_profile(7, 12, 60, false, 1, 2);
    REQUIRE(cut.cutoff);
    CHECK(cut.cutoff->find("max-dimension") != std::string::npos);
    CHECK(cut.rows.back().k < 36);
    CHECK_THROWS_AS(middle_mass_profile(7, 13, 40, false), std::invalid_argument);
  }
}
