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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "slopekit/arith.hpp"

namespace slopekit::padic {

struct NewtonVertex {
  long index = 0;
  Rational valuation;
};

struct NewtonSlope {
  Rational slope;  // valuation of the roots on this segment
  long multiplicity = 0;
};

/// Lower convex hull of {(i, v_p(c_i))}. Collinear interior points are not
/// vertices. `slopes` lists root valuations (the negated segment slopes) in
/// ascending order, so the last segment comes first.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
  std::vector<NewtonSlope> slopes;
  long zero_roots = 0;  // index of the first nonzero coefficient

  /// Root valuations with multiplicity, ascending.
  std::vector<Rational> root_valuations() const;
  long total_multiplicity() const;
};

/// coeffs are listed lowest degree first; the leading coefficient must be
/// nonzero.
NewtonPolygon newton_polygon(std::span<const Rational> coeffs, long p);
NewtonPolygon newton_polygon(std::span<const Integer> coeffs, long p);

/// Same hull from known valuations; nullopt marks a zero coefficient. Used
/// when only the valuations of the coefficients are known.
NewtonPolygon newton_polygon_from_valuations(std::span<const std::optional<Rational>> valuations);

}  // namespace slopekit::padic
