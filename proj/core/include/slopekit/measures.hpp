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
#include <string>
#include <utility>
#include <vector>

#include "slopekit/arith.hpp"

namespace slopekit::measure {

/// Point masses slope / (k - 1) of weight-k, level-p eigenforms, sorted.
struct SlopeMeasure {
  long p = 0;
  long k = 0;
  std::vector<Rational> masses;
  bool includes_newforms = false;
  long old_count = 0;
  long new_count = 0;

  /// Multiset equality under eta <-> 1 - eta.
  bool is_symmetric() const;
  bool in_unit_interval() const;
};

/// Oldform masses come in pairs from the Newton polygon of
/// X^2 - a X + p^{k-1} with v_p(a) = each level-one slope. Newforms, when
/// included, add dim_new copies of (k - 2) / (2 (k - 1)).
SlopeMeasure supersingularity_measure(long p, long k, bool include_newforms);

/// Same, reusing level-one slopes computed elsewhere.
SlopeMeasure supersingularity_measure(long p, long k, bool include_newforms, const std::vector<Rational>& level_one_slopes);

/// The two root valuations of X^2 - a X + p^{k-1} when v_p(a) = slope.
std::pair<Rational, Rational> oldform_pair(long k, const Rational& slope);

struct SupportBound {
  long p = 0;
  long k = 0;
  long log_term = 0;  // floor(log_p(k - 1))
  Rational left_end;
  Rational right_end;
};

/// left_end = 1/(p+1) + floor(log_p(k-1)) / (k-1), right_end = 1 - left_end.
SupportBound middle_interval_bound(long p, long k);

struct MiddleMass {
  long count = 0;
  Rational fraction;  // count / total masses, 0 for an empty measure
};

/// Masses strictly inside (left_end, right_end).
MiddleMass mass_in_middle(const SlopeMeasure& m, const SupportBound& b);

struct RegularityReport {
  long p = 0;
  long k_min = 12;
  long k_max = 0;
  bool regular = true;
  std::vector<long> weights_checked;           // weights with a nonzero cusp space
  std::vector<std::pair<long, Rational>> witnesses;  // (k, positive slope)
};

/// Regular iff all level-one slopes vanish for even k in [k_min, k_max];
/// k_max defaults to p + 1.
RegularityReport is_regular(long p, long k_min = 12, std::optional<long> k_max = std::nullopt);

struct ProfileRow {
  long p = 0;
  long k = 0;
  long dim_old = 0;
  long dim_new = 0;
  MiddleMass middle;
  SupportBound bound;
  SlopeMeasure measure;
};

struct Profile {
  std::vector<ProfileRow> rows;
  /// Set when the dimension guard stopped the sweep; names the guard.
  std::optional<std::string> cutoff;
};

inline constexpr long kDefaultMaxDimension = 48;

/// One row per even k in [k_min, k_max], in weight order. Stops before the
/// first weight whose level-one dimension exceeds max_dimension.
Profile middle_mass_profile(long p, long k_min, long k_max, bool include_newforms, unsigned jobs = 1,
                            long max_dimension = kDefaultMaxDimension);

}  // namespace slopekit::measure
