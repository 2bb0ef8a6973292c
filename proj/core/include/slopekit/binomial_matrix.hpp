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

#include <string>
#include <vector>

#include "slopekit/arith.hpp"
#include "slopekit/matrix.hpp"

namespace slopekit::comb {

/// M with rows i such that i(p-1) + alpha lies in the open interval
/// (rho, r - rho), columns j in [alpha - rho, alpha], and entries
/// C(r - alpha + j, i(p-1) + j).
struct BinomialMatrix {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long rho = 0;
  std::vector<long> rows;  // i, ascending
  std::vector<long> cols;  // j, ascending
  IntMatrix entries;

  long row_count() const { return static_cast<long>(rows.size()); }

  /// Right square block: the last row_count() columns.
  IntMatrix right_block() const;
  std::vector<long> right_block_cols() const;
};

/// Needs 0 <= alpha <= rho. An empty row set is legal (0 x (rho + 1)).
BinomialMatrix build_matrix_M(long p, long r, long alpha);

/// C(r - alpha + j, i(p-1) + j) C(r, alpha - j) == C(r, i(p-1) + alpha) C(i(p-1) + alpha, alpha - j).
bool trinomial_revision_holds(long p, long r, long alpha, long i, long j);

/// [C(i(p-1) + alpha, alpha - j)] over the rows of M and the right-block
/// columns.
IntMatrix reduced_block(const BinomialMatrix& m);

/// [C(i(p-1) + gamma, j)] for 0 <= i, j < R.
IntMatrix shifted_block(long p, long R, long gamma);

/// [C(i(p-1), j)] for 0 <= i, j < R.
IntMatrix power_binomial_block(long p, long R);

/// [C(gamma, j - i)] for 0 <= i, j < R.
IntMatrix shift_block(long R, long gamma);

struct FactorRankReport {
  long p = 0;
  long R = 0;
  long gamma = 0;
  bool factorization_holds = false;  // shifted = power_binomial * shift
  bool shift_unitriangular = false;
  Integer determinant;               // det power_binomial_block
  Integer expected_determinant;      // (p-1)^{R(R-1)/2}
  bool determinant_matches = false;
  std::size_t rank_mod_p = 0;        // of the column-reversed shifted block
  bool full_rank = false;

  bool ok() const { return factorization_holds && shift_unitriangular && determinant_matches && full_rank; }
  std::string failure() const;
};

FactorRankReport factor_and_rank_checks(long p, long R, long gamma);

/// Everything checkable about M for one (p, r, alpha).
struct MatrixSuiteReport {
  long p = 0;
  long r = 0;
  long alpha = 0;
  long R = 0;
  long gamma = 0;
  long entries_checked = 0;
  bool revision_holds = true;
  bool row_bound_holds = true;       // R <= rho + 1
  bool scaling_holds = true;         // right block = diag * reduced * diag^{-1}
  bool reduced_is_reversed_shift = true;
  FactorRankReport factor;

  bool ok() const {
    return revision_holds && row_bound_holds && scaling_holds && reduced_is_reversed_shift && (R == 0 || factor.ok());
  }
};

MatrixSuiteReport check_matrix_suite(long p, long r, long alpha);

}  // namespace slopekit::comb
