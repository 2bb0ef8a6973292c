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

namespace slopekit {

/// Dense univariate polynomial over Q, lowest degree first. Always trimmed:
/// the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, long degree);
  /// (a X + b) as a polynomial.
  static QPoly linear(const Rational& a, const Rational& b);
  /// C(a X + b, m) = prod_{u<m} (a X + b - u) / m!.
  static QPoly binomial_of_linear(const Rational& a, const Rational& b, long m);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& x) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const Rational& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Homogeneous polynomial of degree `degree` in x, y over Q, stored densely by
/// the exponent of x: coefficient i belongs to x^i y^(degree - i).
class HomPoly {
 public:
  explicit HomPoly(long degree);

  long degree() const { return degree_; }
  const Rational& coeff(long x_exponent) const;
  void add_to(long x_exponent, const Rational& c);
  bool is_zero() const;

  HomPoly& operator+=(const HomPoly& other);
  HomPoly& operator-=(const HomPoly& other);
  HomPoly& operator*=(const Rational& c);
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

  /// x^a y^b.
  static HomPoly monomial(long x_exponent, long y_exponent, const Rational& c = 1);
  /// theta = x y^p - x^p y.
  static HomPoly theta(long p);
  HomPoly pow(long e) const;

  std::string str() const;

 private:
  long degree_;
  std::vector<Rational> coeffs_;
};

}  // namespace slopekit
