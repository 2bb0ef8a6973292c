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


#include "slopekit/binomial_matrix.hpp"

#include <stdexcept>

#include "slopekit/lambda.hpp"

namespace slopekit::comb {

IntMatrix BinomialMatrix::right_block() const {
  const std::size_t R = rows.size();
  if (R > cols.size()) throw std::logic_error("more rows than columns; no right square block");
  const std::size_t offset = cols.size() - R;
  IntMatrix out(R, R);
  for (std::size_t a = 0; a < R; ++a) {
    for (std::size_t b = 0; b < R; ++b) out(a, b) = entries(a, offset + b);
  }
  return out;
}

std::vector<long> BinomialMatrix::right_block_cols() const {
  if (rows.size() > cols.size()) throw std::logic_error("more rows than columns; no right square block");
  return std::vector<long>(cols.end() - static_cast<long>(rows.size()), cols.end());
}

BinomialMatrix build_matrix_M(long p, long r, long alpha) {
  require_prime(p);
  BinomialMatrix m;
  m.p = p;
  m.r = r;
  m.alpha = alpha;
  m.rho = rho_of(p, r);
  if (alpha < 0 || alpha > m.rho) throw std::invalid_argument("build_matrix_M needs 0 <= alpha <= rho");
  for (long i = 0; i * (p - 1) + alpha < r - m.rho; ++i) {
    if (i * (p - 1) + alpha > m.rho) m.rows.push_back(i);
  }
  for (long j = alpha - m.rho; j <= alpha; ++j) m.cols.push_back(j);
  m.entries = IntMatrix(m.rows.size(), m.cols.size());
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    for (std::size_t b = 0; b < m.cols.size(); ++b) {
      const long i = m.rows[a];
      const long j = m.cols[b];
      m.entries(a, b) = binomial(r - alpha + j, i * (p - 1) + j);
    }
  }
  return m;
}

bool trinomial_revision_holds(long p, long r, long alpha, long i, long j) {
  const long top = i * (p - 1) + alpha;
  return binomial(r - alpha + j, i * (p - 1) + j) * binomial(r, alpha - j) ==
         binomial(r, top) * binomial(top, alpha - j);
}

IntMatrix reduced_block(const BinomialMatrix& m) {
  const auto cols = m.right_block_cols();
  IntMatrix out(m.rows.size(), cols.size());
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      out(a, b) = binomial(m.rows[a] * (m.p - 1) + m.alpha, m.alpha - cols[b]);
    }
  }
  return out;
}

IntMatrix shifted_block(long p, long R, long gamma) {
  IntMatrix out(static_cast<std::size_t>(R), static_cast<std::size_t>(R));
  for (long i = 0; i < R; ++i) {
    for (long j = 0; j < R; ++j) out(i, j) = binomial(i * (p - 1) + gamma, j);
  }
  return out;
}

IntMatrix power_binomial_block(long p, long R) {
  IntMatrix out(static_cast<std::size_t>(R), static_cast<std::size_t>(R));
  for (long i = 0; i < R; ++i) {
    for (long j = 0; j < R; ++j) out(i, j) = binomial(i * (p - 1), j);
  }
  return out;
}

IntMatrix shift_block(long R, long gamma) {
  IntMatrix out(static_cast<std::size_t>(R), static_cast<std::size_t>(R));
  for (long i = 0; i < R; ++i) {
    for (long j = 0; j < R; ++j) out(i, j) = binomial(gamma, j - i);
  }
  return out;
}

std::string FactorRankReport::failure() const {
  std::string where = " at (p=" + std::to_string(p) + ", R=" + std::to_string(R) + ", gamma=" + std::to_string(gamma) + ")";
  if (!factorization_holds) return "Vandermonde factorization fails" + where;
  if (!shift_unitriangular) return "shift block is not unitriangular" + where;
  if (!determinant_matches) {
    return "det = " + determinant.get_str() + " but expected " + expected_determinant.get_str() + where;
  }
  if (!full_rank) return "rank mod p is " + std::to_string(rank_mod_p) + " < R" + where;
  return "";
}

FactorRankReport factor_and_rank_checks(long p, long R, long gamma) {
  require_prime(p);
  if (R < 1 || gamma < 0) throw std::invalid_argument("factor_and_rank_checks needs R >= 1 and gamma >= 0");
  FactorRankReport out;
  out.p = p;
  out.R = R;
  out.gamma = gamma;
  const IntMatrix shifted = shifted_block(p, R, gamma);
  const IntMatrix powers = power_binomial_block(p, R);
  const IntMatrix shift = shift_block(R, gamma);
  out.factorization_holds = (powers * shift == shifted);

  out.shift_unitriangular = true;
  for (long i = 0; i < R; ++i) {
    for (long j = 0; j < R; ++j) {
      const Integer& e = shift(i, j);
      if ((i == j && e != 1) || (j < i && e != 0)) out.shift_unitriangular = false;
    }
  }

  out.determinant = determinant(powers);
  out.expected_determinant = ipow(p - 1, static_cast<unsigned long>(R * (R - 1) / 2));
  out.determinant_matches = (out.determinant == out.expected_determinant);

  RatMatrix reversed(static_cast<std::size_t>(R), static_cast<std::size_t>(R));
  for (long i = 0; i < R; ++i) {
    for (long j = 0; j < R; ++j) reversed(i, j) = shifted(i, R - 1 - j);
  }
  out.rank_mod_p = rank_mod_p(reversed, p);
  out.full_rank = (out.rank_mod_p == static_cast<std::size_t>(R));
  return out;
}

MatrixSuiteReport check_matrix_suite(long p, long r, long alpha) {
  const BinomialMatrix m = build_matrix_M(p, r, alpha);
  MatrixSuiteReport out;
  out.p = p;
  out.r = r;
  out.alpha = alpha;
  out.R = m.row_count();
  out.row_bound_holds = out.R <= m.rho + 1;
  for (long i : m.rows) {
    for (long j : m.cols) {
      ++out.entries_checked;
      if (!trinomial_revision_holds(p, r, alpha, i, j)) out.revision_holds = false;
    }
  }
  if (out.R == 0 || !out.row_bound_holds) return out;

  const IntMatrix right = m.right_block();
  const IntMatrix reduced = reduced_block(m);
  const auto cols = m.right_block_cols();
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const Integer lhs = right(a, b) * binomial(r, alpha - cols[b]);
      const Integer rhs = binomial(r, m.rows[a] * (p - 1) + alpha) * reduced(a, b);
      if (lhs != rhs) out.scaling_holds = false;
    }
  }

  out.gamma = m.rows.front() * (p - 1) + alpha;
  const IntMatrix shifted = shifted_block(p, out.R, out.gamma);
  for (long a = 0; a < out.R; ++a) {
    for (long b = 0; b < out.R; ++b) {
      if (reduced(a, b) != shifted(a, out.R - 1 - b)) out.reduced_is_reversed_shift = false;
    }
  }
  // Rows of M are consecutive integers, so the reindexing i -> i - i_min holds.
  for (std::size_t a = 1; a < m.rows.size(); ++a) {
    if (m.rows[a] != m.rows[a - 1] + 1) out.reduced_is_reversed_shift = false;
  }
  out.factor = factor_and_rank_checks(p, out.R, out.gamma);
  return out;
}

}  // namespace slopekit::comb
