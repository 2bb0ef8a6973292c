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


#include "slopekit/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace slopekit {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rational& c, long degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree + 1));
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::linear(const Rational& a, const Rational& b) { return QPoly({b, a}); }

QPoly QPoly::binomial_of_linear(const Rational& a, const Rational& b, long m) {
  QPoly out = constant(1);
  for (long u = 0; u < m; ++u) out = out * linear(a, b - u);
  out *= Rational(1) / Rational(factorial(m));
  return out;
}

Rational QPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << c.get_str() << ")";
    if (i > 0) os << "*X^" << i;
    first = false;
  }
  return os.str();
}

HomPoly::HomPoly(long degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("HomPoly degree must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(degree + 1));
}

const Rational& HomPoly::coeff(long x_exponent) const {
  static const Rational zero = 0;
  if (x_exponent < 0 || x_exponent > degree_) return zero;
  return coeffs_[static_cast<std::size_t>(x_exponent)];
}

void HomPoly::add_to(long x_exponent, const Rational& c) {
  if (x_exponent < 0 || x_exponent > degree_) {
    throw std::out_of_range("monomial exponent outside [0, degree]");
  }
  coeffs_[static_cast<std::size_t>(x_exponent)] += c;
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

HomPoly& HomPoly::operator+=(const HomPoly& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("HomPoly degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("HomPoly degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  HomPoly out(a.degree_ + b.degree_);
  for (long i = 0; i <= a.degree_; ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (long j = 0; j <= b.degree_; ++j) {
      const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (bj != 0) out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return out;
}

HomPoly HomPoly::monomial(long x_exponent, long y_exponent, const Rational& c) {
  if (x_exponent < 0 || y_exponent < 0) throw std::invalid_argument("negative monomial exponent");
  HomPoly out(x_exponent + y_exponent);
  out.add_to(x_exponent, c);
  return out;
}

HomPoly HomPoly::theta(long p) {
  HomPoly out(p + 1);
  out.add_to(1, 1);
  out.add_to(p, -1);
  return out;
}

HomPoly HomPoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  HomPoly out = monomial(0, 0);
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string HomPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (long i = degree_; i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << c.get_str() << ")*x^" << i << "*y^" << (degree_ - i);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace slopekit
