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


#include "slopekit/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "slopekit/modular_forms.hpp"
#include "slopekit/newton.hpp"
#include "slopekit/parallel.hpp"

namespace slopekit::measure {

bool SlopeMeasure::is_symmetric() const {
  std::vector<Rational> mirrored;
  mirrored.reserve(masses.size());
  for (const auto& m : masses) mirrored.push_back(1 - m);
  std::sort(mirrored.begin(), mirrored.end());
  std::vector<Rational> sorted = masses;
  std::sort(sorted.begin(), sorted.end());
  return mirrored == sorted;
}

bool SlopeMeasure::in_unit_interval() const {
  return std::all_of(masses.begin(), masses.end(), [](const Rational& m) { return m >= 0 && m <= 1; });
}

std::pair<Rational, Rational> oldform_pair(long k, const Rational& slope) {
  const std::vector<std::optional<Rational>> vals{Rational(k - 1), slope, Rational(0)};
  const auto roots = padic::newton_polygon_from_valuations(vals).root_valuations();
  if (roots.size() != 2) throw std::logic_error("quadratic Newton polygon without two roots");
  return {roots[0], roots[1]};
}

SlopeMeasure supersingularity_measure(long p, long k, bool include_newforms, const std::vector<Rational>& level_one_slopes) {
  require_prime(p);
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("supersingularity_measure needs even k >= 4");
  if (static_cast<long>(level_one_slopes.size()) != mf::dim_cusp_level1(k)) {
    throw std::invalid_argument("slope count does not match dim S_k");
  }
  SlopeMeasure m;
  m.p = p;
  m.k = k;
  m.includes_newforms = include_newforms;
  const Rational denom = k - 1;
  for (const auto& s : level_one_slopes) {
    const auto [lo, hi] = oldform_pair(k, s);
    m.masses.push_back(lo / denom);
    m.masses.push_back(hi / denom);
  }
  m.old_count = static_cast<long>(m.masses.size());
  if (include_newforms) {
    m.new_count = mf::dim_cusp(k, p) - m.old_count;
    if (m.new_count < 0) throw std::logic_error("negative newform dimension");
    const Rational atom = Rational(k - 2) / (2 * denom);
    m.masses.insert(m.masses.end(), static_cast<std::size_t>(m.new_count), atom);
  }
  std::sort(m.masses.begin(), m.masses.end());
  return m;
}

SlopeMeasure supersingularity_measure(long p, long k, bool include_newforms) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("supersingularity_measure needs even k >= 4");
  return supersingularity_measure(p, k, include_newforms, mf::slopes(p, k));
}

SupportBound middle_interval_bound(long p, long k) {
  require_prime(p);
  if (k < 3) throw std::invalid_argument("middle_interval_bound needs k >= 3");
  SupportBound b;
  b.p = p;
  b.k = k;
  b.log_term = floor_log(p, k - 1);
  b.left_end = Rational(1) / (p + 1) + Rational(b.log_term) / Rational(k - 1);
  b.right_end = 1 - b.left_end;
  return b;
}

MiddleMass mass_in_middle(const SlopeMeasure& m, const SupportBound& b) {
  if (m.p != b.p || m.k != b.k) throw std::invalid_argument("mass_in_middle: measure and bound disagree on (p, k)");
  MiddleMass out;
  for (const auto& x : m.masses) {
    if (x > b.left_end && x < b.right_end) ++out.count;
  }
  out.fraction = m.masses.empty() ? Rational(0) : Rational(out.count) / Rational(static_cast<long>(m.masses.size()));
  return out;
}

RegularityReport is_regular(long p, long k_min, std::optional<long> k_max) {
  require_prime(p);
  if (p < 5) throw std::invalid_argument("is_regular needs p >= 5");
  RegularityReport r;
  r.p = p;
  r.k_min = k_min;
  r.k_max = k_max.value_or(p + 1);
  for (long k = std::max<long>(k_min + (k_min % 2 != 0), 12); k <= r.k_max; k += 2) {
    const auto s = mf::slopes(p, k);
    if (s.empty()) continue;
    r.weights_checked.push_back(k);
    for (const auto& x : s) {
      if (x > 0) {
        r.regular = false;
        r.witnesses.emplace_back(k, x);
      }
    }
  }
  return r;
}

Profile middle_mass_profile(long p, long k_min, long k_max, bool include_newforms, unsigned jobs, long max_dimension) {
  require_prime(p);
  if (k_min % 2 != 0 || k_max % 2 != 0) throw std::invalid_argument("weight range must have even endpoints");
  if (k_min < 4) throw std::invalid_argument("weight range must start at k >= 4");
  if (k_max < k_min) throw std::invalid_argument("empty weight range");
  Profile out;
  std::vector<long> weights;
  for (long k = k_min; k <= k_max; k += 2) {
    const long d = mf::dim_cusp_level1(k);
    if (d > max_dimension) {
      out.cutoff = "max-dimension guard: dim S_" + std::to_string(k) + " = " + std::to_string(d) + " > " +
                   std::to_string(max_dimension) + "; rows stop at k = " + std::to_string(k - 2);
      break;
    }
    weights.push_back(k);
  }
  out.rows = parallel_map(weights.size(), jobs, [&](std::size_t i) {
    const long k = weights[i];
    ProfileRow row;
    row.p = p;
    row.k = k;
    row.measure = supersingularity_measure(p, k, include_newforms);
    row.dim_old = 2 * mf::dim_cusp_level1(k);
    row.dim_new = mf::dim_cusp(k, p) - row.dim_old;
    row.bound = middle_interval_bound(p, k);
    row.middle = mass_in_middle(row.measure, row.bound);
    return row;
  });
  return out;
}

}  // namespace slopekit::measure
