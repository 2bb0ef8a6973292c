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


#include "slopekit/matrix.hpp"

#include <utility>

namespace slopekit {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& b) {
  if (!m.is_square() || m.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<Rational> x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) x[k] -= a(k, j) * x[j];
    x[k] /= a(k, k);
  }
  return x;
}

std::size_t rank_mod_p(const RatMatrix& m, long p) {
  const Integer mod = p;
  Matrix<Integer> a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p))) {
        throw std::invalid_argument("rank_mod_p needs p-integral entries");
      }
      Integer inv;
      mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), mod.get_mpz_t());
      a(i, j) = mod_floor(q.get_num() * inv, mod);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(rank, j), a(pivot, j));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a(rank, col).get_mpz_t(), mod.get_mpz_t());
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Integer f = mod_floor(a(i, col) * inv, mod);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = mod_floor(a(i, j) - f * a(rank, j), mod);
    }
    ++rank;
  }
  return rank;
}

std::vector<Integer> charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  // Berkowitz: c holds det(x I - A_k) for the leading k x k block, highest
  // degree first, grown one row/column at a time via Toeplitz products.
  std::vector<Integer> c = {1};
  for (std::size_t k = 0; k < n; ++k) {
    // A_{k+1} = [[A_k, col], [row, a_kk]].
    const Integer& akk = a(k, k);
    std::vector<Integer> toeplitz(k + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -akk;
    std::vector<Integer> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t m = 2; m < k + 2; ++m) {
      Integer s = 0;
      for (std::size_t j = 0; j < k; ++j) s += a(k, j) * v[j];
      toeplitz[m] = -s;
      std::vector<Integer> next(k);
      for (std::size_t i = 0; i < k; ++i) {
        Integer t = 0;
        for (std::size_t j = 0; j < k; ++j) t += a(i, j) * v[j];
        next[i] = std::move(t);
      }
      v = std::move(next);
    }
    std::vector<Integer> out(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) out[i] += toeplitz[i - j] * c[j];
    }
    c = std::move(out);
  }
  return std::vector<Integer>(c.rbegin(), c.rend());
}

}  // namespace slopekit
