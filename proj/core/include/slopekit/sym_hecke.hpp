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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/arith.hpp"

namespace slopekit::hecke {

/// [[a, b], [c, d]] over Q; group elements have entries in Z[1/p].
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Rational det() const { return a * d - b * c; }
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  std::string str() const;
};

/// Homogeneous degree-t polynomial in x, y with coefficients in Z / p^M,
/// stored by the exponent of x, together with the formal |det|^{t/2} twist
/// counted in half-powers of p.
class SymPoly {
 public:
  SymPoly(long p, unsigned M, long t, long twist_halves = 0);
  static SymPoly monomial(long p, unsigned M, long t, long x_exponent, const Integer& c = 1);

  long p() const { return p_; }
  unsigned precision() const { return M_; }
  long degree() const { return t_; }
  long twist_halves() const { return twist_halves_; }
  const Integer& modulus() const { return modulus_; }
  const Integer& coeff(long x_exponent) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  void set(long x_exponent, const Integer& value);
  void add_to(long x_exponent, const Integer& value);
  void set_twist_halves(long t) { twist_halves_ = t; }
  bool is_zero() const;

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  /// Multiplication by a p-integral rational.
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly x, const SymPoly& y) { return x += y; }
  friend SymPoly operator-(SymPoly x, const SymPoly& y) { return x -= y; }
  friend SymPoly operator*(SymPoly x, const Rational& c) { return x *= c; }
  friend bool operator==(const SymPoly& x, const SymPoly& y);

  /// "exp:coeff" pairs for nonzero coefficients, ascending exponent.
  std::string sparse_str() const;

 private:
  void check_compatible(const SymPoly& other) const;
  long p_;
  unsigned M_;
  long t_;
  long twist_halves_;
  Integer modulus_;
  std::vector<Integer> coeffs_;
};

/// The residue of a p-integral rational modulo p^M in [0, p^M).
Integer reduce_mod_power(const Rational& q, long p, unsigned M);

/// (g f)(x, y) = f(a x + c y, b x + d y). A central factor p^e of g is
/// stripped first (it acts trivially once twisted); the twist then drops by
/// v_p(det) t half-powers.
SymPoly act(const Mat2& g, const SymPoly& f);

/// Vertex [[p^n, a], [0, 1]] with a in Z[1/p] and 0 <= a < p^n.
struct CosetRep {
  long n = 0;
  Rational a;

  Mat2 matrix(long p) const;
  friend bool operator==(const CosetRep& x, const CosetRep& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const CosetRep& x, const CosetRep& y) {
    return x.n != y.n ? x.n < y.n : x.a < y.a;
  }
};

/// g = rep * p^scale * k with k integral of unit determinant.
struct Canonical {
  CosetRep rep;
  long scale = 0;
  Mat2 k;
};

/// Canonical representative of the coset g K Z. Throws PrecisionError when
/// the key needs more than M p-adic digits.
Canonical coset_canonicalize(const Mat2& g, long p, unsigned M);

/// Finite sum of g . v over canonical coset keys, zero terms dropped.
class FormalSum {
 public:
  FormalSum(long p, unsigned M, long t) : p_(p), M_(M), t_(t) {}

  long p() const { return p_; }
  unsigned precision() const { return M_; }
  long degree() const { return t_; }
  const std::map<CosetRep, SymPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds g . v, i.e. rep . (k v) for g = rep p^e k.
  void add(const Mat2& g, const SymPoly& v);

  /// Left translation S -> g S.
  FormalSum translate(const Mat2& g) const;

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator+(FormalSum x, const FormalSum& y) { return x += y; }
  friend FormalSum operator*(FormalSum x, const Rational& c) { return x *= c; }
  friend bool operator==(const FormalSum& x, const FormalSum& y);

  /// One line per term, sorted by key: four matrix entries, twist, then
  /// sparse exponent:coefficient pairs.
  std::string dump() const;

 private:
  void merge(const CosetRep& key, SymPoly v);
  long p_;
  unsigned M_;
  long t_;
  std::map<CosetRep, SymPoly> terms_;
};

/// Small stand-ins for the tower-sized parameters; every identity checked
/// is algebraic in them.
struct SurrogateParams {
  long p = 5;
  long t = 2;
  long delta = 1;
  long eta = 0;
  long alpha = 0;
  unsigned M = 0;  // 0 selects t + delta + 2

  unsigned precision() const { return M == 0 ? static_cast<unsigned>(t + delta + 2) : M; }
  /// Throws std::invalid_argument on violated index constraints.
  void validate() const;
};

/// h_alpha = x^alpha y^{t-alpha} - x^{alpha+delta} y^{t-alpha-delta} and its
/// image under the swap [[0,1],[1,0]].
std::pair<SymPoly, SymPoly> h_polys(const SurrogateParams& sp, long alpha);

/// sum_mu [[p,[mu]],[0,1]] . ([[1,-[mu]],[0,p]] v) + [[1,0],[0,p]] . ([[p,0],[0,1]] v)
/// for every term, Teichmuller lifts at precision p^M.
FormalSum hecke_T(const FormalSum& input, const SurrogateParams& sp);

struct ExpansionReport {
  bool matches = false;
  std::size_t terms = 0;
  std::string first_difference;
  /// Whether the single-exponent rewriting with the overline exponent
  /// convention reproduces the same sum (informational).
  bool merged_exponent_form_matches = false;
};

/// Compares hecke_T(1 . h_alpha) against the term-by-term binomial
/// expansion of each summand.
ExpansionReport verify_T_expansion(const SurrogateParams& sp, long alpha);

/// Delta_j with scalar (1-p)^{-alpha} theta^alpha x^{eta(p-1)} y^{...}
/// = sum_j Delta_j x^{j(p-1)+alpha} y^{t-j(p-1)-alpha}, obtained by expanding
/// the product. Throws std::logic_error if the expansion leaves that family.
std::map<long, Rational> theta_multiple_coeffs(const SurrogateParams& sp, long alpha, long eta, const Rational& scalar);

/// theta^alpha divides f modulo p (homogeneous division over F_p).
bool divisible_by_theta_power_mod_p(const SymPoly& f, long alpha);

/// theta^e as a SymPoly of degree e (p + 1).
SymPoly theta_power(long p, unsigned M, long e);

SymPoly multiply(const SymPoly& f, const SymPoly& g);

}  // namespace slopekit::hecke
