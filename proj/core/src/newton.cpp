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


#include "slopekit/newton.hpp"

#include <algorithm>
#include <stdexcept>

#include "slopekit/padic.hpp"

namespace slopekit::padic {

std::vector<Rational> NewtonPolygon::root_valuations() const {
  std::vector<Rational> out;
  for (const auto& s : slopes) {
    for (long m = 0; m < s.multiplicity; ++m) out.push_back(s.slope);
  }
  return out;
}

long NewtonPolygon::total_multiplicity() const {
  long total = 0;
  for (const auto& s : slopes) total += s.multiplicity;
  return total;
}

namespace {

// Positive when a -> b -> c turns counter-clockwise.
Rational cross(const NewtonVertex& a, const NewtonVertex& b, const NewtonVertex& c) {
  return Rational(b.index - a.index) * (c.valuation - a.valuation) -
         (b.valuation - a.valuation) * Rational(c.index - a.index);
}

}  // namespace

NewtonPolygon newton_polygon(std::span<const Rational> coeffs, long p) {
  require_prime(p);
  std::vector<std::optional<Rational>> vals;
  vals.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c == 0) {
      vals.emplace_back();
    } else {
      vals.emplace_back(valuation(c, p).value());
    }
  }
  return newton_polygon_from_valuations(vals);
}

NewtonPolygon newton_polygon_from_valuations(std::span<const std::optional<Rational>> valuations) {
  if (valuations.empty() || std::none_of(valuations.begin(), valuations.end(), [](const auto& v) { return v.has_value(); })) {
    throw std::invalid_argument("newton_polygon of the zero polynomial");
  }
  if (!valuations.back()) throw std::invalid_argument("newton_polygon needs a nonzero leading coefficient");

  NewtonPolygon out;
  std::vector<NewtonVertex> hull;
  for (std::size_t i = 0; i < valuations.size(); ++i) {
    if (!valuations[i]) continue;
    NewtonVertex point{static_cast<long>(i), *valuations[i]};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), point) <= 0) hull.pop_back();
    hull.push_back(std::move(point));
  }
  out.zero_roots = hull.front().index;
  for (std::size_t s = hull.size(); s-- > 1;) {
    const long length = hull[s].index - hull[s - 1].index;
    Rational slope = (hull[s - 1].valuation - hull[s].valuation) / Rational(length);
    out.slopes.push_back({slope, length});
  }
  out.vertices = std::move(hull);
  return out;
}

NewtonPolygon newton_polygon(std::span<const Integer> coeffs, long p) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return newton_polygon(std::span<const Rational>(q), p);
}

}  // namespace slopekit::padic
