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

#include <cstddef>
#include <vector>

#include "slopekit/arith.hpp"
#include "slopekit/matrix.hpp"

namespace slopekit::mf {

/// Truncated q-expansion a_0 + a_1 q + ... + a_{prec-1} q^{prec-1}.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(long weight, std::vector<Rational> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {}
  static QExpansion one(std::size_t prec);

  long weight() const { return weight_; }
  std::size_t prec() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_cusp() const { return !coeffs_.empty() && coeffs_[0] == 0; }
  bool is_integral() const;

  /// Sums need equal weights; the result keeps the smaller precision.
  friend QExpansion operator+(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator-(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator*(const QExpansion& f, const QExpansion& g);
  friend QExpansion operator*(const Rational& c, const QExpansion& f);
  friend bool operator==(const QExpansion& f, const QExpansion& g) {
    return f.weight_ == g.weight_ && f.coeffs_ == g.coeffs_;
  }

  QExpansion truncated(std::size_t prec) const;
  QExpansion pow(unsigned e) const;

 private:
  long weight_ = 0;
  std::vector<Rational> coeffs_;
};

/// B_0, ..., B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(long n);

/// sum of d^e over divisors d of n.
Integer divisor_sigma(long e, long n);

/// Normalized E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, k even >= 4.
QExpansion eisenstein(long k, std::size_t prec);

/// q prod (1 - q^n)^24.
QExpansion delta(std::size_t prec);

/// dim S_k(SL_2(Z)) for even k >= 0.
long dim_cusp_level1(long k);

/// dim S_k(Gamma_0(N)) for N = 1 or N prime, even k >= 2.
long dim_cusp(long k, long level);

/// f_i = q^i + O(q^{d+1}), i = 1..d, from Delta^i E_4^a E_6^b with b in {0, 1}
/// and row reduction. Throws std::invalid_argument if prec <= d.
std::vector<QExpansion> miller_basis(long k, std::size_t prec);

/// a_n(T_p f) = a_{pn}(f) + p^{k-1} a_{n/p}(f) for 0 <= n < out_prec.
QExpansion apply_hecke(const QExpansion& f, long p, std::size_t out_prec);

struct HeckeMatrix {
  long p = 0;
  long k = 0;
  std::size_t dim = 0;
  /// Row i holds the coordinates of T_p f_{i+1}: entry (i, j) = a_{j+1}(T_p f_{i+1}).
  IntMatrix entries;
};

HeckeMatrix hecke_matrix(long p, long k);

/// Root valuations of the characteristic polynomial of T_p on S_k(SL_2(Z)),
/// ascending with multiplicity. Empty for k < 12 or an empty space.
std::vector<Rational> slopes(long p, long k);

/// Same, from an already computed Hecke matrix.
std::vector<Rational> slopes(const HeckeMatrix& h);

}  // namespace slopekit::mf
