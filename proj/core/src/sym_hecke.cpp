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


#include "slopekit/sym_hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "slopekit/padic.hpp"
#include "slopekit/polynomial.hpp"

namespace slopekit::hecke {

using padic::valuation;

Mat2 Mat2::inverse() const {
  const Rational dt = det();
  if (dt == 0) throw std::invalid_argument("singular 2x2 matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string Mat2::str() const {
  return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() + "]]";
}

Integer reduce_mod_power(const Rational& q, long p, unsigned M) {
  const Integer modulus = ipow(p, M);
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::invalid_argument("reduce_mod_power needs a p-integral rational, got " + q.get_str());
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), modulus.get_mpz_t());
  return mod_floor(q.get_num() * inv, modulus);
}

SymPoly::SymPoly(long p, unsigned M, long t, long twist_halves)
    : p_(p), M_(M), t_(t), twist_halves_(twist_halves), modulus_(ipow(p, M)) {
  require_prime(p);
  if (M < 1) throw std::invalid_argument("SymPoly needs precision M >= 1");
  if (t < 0) throw std::invalid_argument("SymPoly needs degree t >= 0");
  coeffs_.resize(static_cast<std::size_t>(t + 1));
}

SymPoly SymPoly::monomial(long p, unsigned M, long t, long x_exponent, const Integer& c) {
  SymPoly out(p, M, t);
  out.set(x_exponent, c);
  return out;
}

const Integer& SymPoly::coeff(long x_exponent) const {
  if (x_exponent < 0 || x_exponent > t_) throw std::out_of_range("exponent outside [0, t]");
  return coeffs_[static_cast<std::size_t>(x_exponent)];
}

void SymPoly::set(long x_exponent, const Integer& value) {
  if (x_exponent < 0 || x_exponent > t_) throw std::out_of_range("exponent outside [0, t]");
  coeffs_[static_cast<std::size_t>(x_exponent)] = mod_floor(value, modulus_);
}

void SymPoly::add_to(long x_exponent, const Integer& value) { set(x_exponent, coeff(x_exponent) + value); }

bool SymPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void SymPoly::check_compatible(const SymPoly& other) const {
  if (p_ != other.p_ || M_ != other.M_ || t_ != other.t_) {
    throw std::invalid_argument("SymPoly arithmetic needs equal p, M and degree");
  }
  if (twist_halves_ != other.twist_halves_) throw std::invalid_argument("SymPoly arithmetic needs equal twists");
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod_floor(coeffs_[i] + other.coeffs_[i], modulus_);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod_floor(coeffs_[i] - other.coeffs_[i], modulus_);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  const Integer k = reduce_mod_power(c, p_, M_);
  for (auto& x : coeffs_) x = mod_floor(x * k, modulus_);
  return *this;
}

bool operator==(const SymPoly& x, const SymPoly& y) {
  return x.p_ == y.p_ && x.M_ == y.M_ && x.t_ == y.t_ && x.twist_halves_ == y.twist_halves_ && x.coeffs_ == y.coeffs_;
}

std::string SymPoly::sparse_str() const {
  std::string out;
  for (long i = 0; i <= t_; ++i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + c.get_str();
  }
  return out.empty() ? "0" : out;
}

SymPoly multiply(const SymPoly& f, const SymPoly& g) {
  if (f.p() != g.p() || f.precision() != g.precision()) throw std::invalid_argument("multiply: mismatched p or M");
  SymPoly out(f.p(), f.precision(), f.degree() + g.degree(), f.twist_halves() + g.twist_halves());
  for (long i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (long j = 0; j <= g.degree(); ++j) {
      if (g.coeff(j) != 0) out.add_to(i + j, f.coeff(i) * g.coeff(j));
    }
  }
  return out;
}

namespace {

long min_valuation(const Mat2& g, long p) {
  std::optional<Rational> best;
  for (const Rational* e : {&g.a, &g.b, &g.c, &g.d}) {
    if (*e == 0) continue;
    const Rational v = valuation(*e, p).value();
    if (!best || v < *best) best = v;
  }
  if (!best) throw std::invalid_argument("zero matrix");
  return best->get_num().get_si();
}

// (u x + v y)^n mod p^M, as coefficients by exponent of x.
std::vector<Integer> linear_power(const Integer& u, const Integer& v, long n, const Integer& modulus) {
  std::vector<Integer> out(static_cast<std::size_t>(n + 1));
  out[0] = 1;
  for (long step = 0; step < n; ++step) {
    std::vector<Integer> next(out.size());
    for (long i = 0; i <= step; ++i) {
      const Integer& c = out[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      next[static_cast<std::size_t>(i + 1)] += c * u;
      next[static_cast<std::size_t>(i)] += c * v;
    }
    for (auto& c : next) c = mod_floor(c, modulus);
    out = std::move(next);
  }
  return out;
}

}  // namespace

SymPoly act(const Mat2& g, const SymPoly& f) {
  if (g.det() == 0) throw std::invalid_argument("act needs an invertible matrix");
  const long p = f.p();
  const unsigned M = f.precision();
  const long t = f.degree();
  const long e = min_valuation(g, p);
  const Rational s = rpow(p, -e);
  const Mat2 g0{g.a * s, g.b * s, g.c * s, g.d * s};
  const Integer a = reduce_mod_power(g0.a, p, M);
  const Integer b = reduce_mod_power(g0.b, p, M);
  const Integer c = reduce_mod_power(g0.c, p, M);
  const Integer d = reduce_mod_power(g0.d, p, M);
  const long det_val = valuation(g0.det(), p).value().get_num().get_si();

  SymPoly out(p, M, t, f.twist_halves() - det_val * t);
  const Integer& modulus = out.modulus();
  for (long i = 0; i <= t; ++i) {
    const Integer& fi = f.coeff(i);
    if (fi == 0) continue;
    // x^i y^{t-i} -> (a x + c y)^i (b x + d y)^{t-i}
    const auto left = linear_power(a, c, i, modulus);
    const auto right = linear_power(b, d, t - i, modulus);
    for (long u = 0; u <= i; ++u) {
      if (left[u] == 0) continue;
      const Integer lu = fi * left[u];
      for (long w = 0; w <= t - i; ++w) {
        if (right[w] != 0) out.add_to(u + w, lu * right[w]);
      }
    }
  }
  return out;
}

Mat2 CosetRep::matrix(long p) const { return {rpow(p, n), a, 0, 1}; }

Canonical coset_canonicalize(const Mat2& g, long p, unsigned M) {
  require_prime(p);
  if (g.det() == 0) throw std::invalid_argument("coset_canonicalize needs an invertible matrix");
  Mat2 h = g;
  auto val = [p](const Rational& x) { return valuation(x, p); };
  // Column operations by elements of K bring h to [[*, *], [0, p^e]].
  if (val(h.c) < val(h.d)) {
    std::swap(h.a, h.b);
    std::swap(h.c, h.d);
  }
  if (h.c != 0) {
    const Rational m = h.c / h.d;
    h.a -= m * h.b;
    h.c = 0;
  }
  const long e = val(h.d).value().get_num().get_si();
  const Rational unit_d = h.d / rpow(p, e);
  h.b /= unit_d;
  h.d = rpow(p, e);
  const long f = val(h.a).value().get_num().get_si();
  h.a = rpow(p, f);

  CosetRep rep;
  rep.n = f - e;
  if (rep.n > static_cast<long>(M)) {
    throw PrecisionError("coset key needs " + std::to_string(rep.n) + " p-adic digits but M = " + std::to_string(M));
  }
  const Rational beta = h.b / rpow(p, e);
  rep.a = 0;
  if (beta != 0) {
    const long v = val(beta).value().get_num().get_si();
    if (v < rep.n) {
      const long shift = v < 0 ? -v : 0;
      const long digits = rep.n + shift;
      const Integer residue = reduce_mod_power(beta * rpow(p, shift), p, static_cast<unsigned>(digits));
      rep.a = Rational(residue) / rpow(p, shift);
    }
  }

  Canonical out;
  out.rep = rep;
  out.scale = e;
  const Mat2 c_inv = rep.matrix(p).inverse();
  const Rational s = rpow(p, -e);
  const Mat2 k0 = c_inv * g;
  out.k = {k0.a * s, k0.b * s, k0.c * s, k0.d * s};
  for (const Rational* x : {&out.k.a, &out.k.b, &out.k.c, &out.k.d}) {
    if (*x != 0 && val(*x) < 0) throw std::logic_error("canonicalization produced a non-integral k");
  }
  if (val(out.k.det()) != 0) throw std::logic_error("canonicalization produced k with non-unit determinant");
  return out;
}

void FormalSum::merge(const CosetRep& key, SymPoly v) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!v.is_zero()) terms_.emplace(key, std::move(v));
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

void FormalSum::add(const Mat2& g, const SymPoly& v) {
  if (v.p() != p_ || v.precision() != M_ || v.degree() != t_) {
    throw std::invalid_argument("FormalSum::add: polynomial has the wrong p, M or degree");
  }
  const Canonical c = coset_canonicalize(g, p_, M_);
  merge(c.rep, act(c.k, v));
}

FormalSum FormalSum::translate(const Mat2& g) const {
  FormalSum out(p_, M_, t_);
  for (const auto& [key, v] : terms_) out.add(g * key.matrix(p_), v);
  return out;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.p_ != p_ || other.M_ != M_ || other.t_ != t_) throw std::invalid_argument("FormalSum shape mismatch");
  for (const auto& [key, v] : other.terms_) merge(key, v);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const FormalSum& x, const FormalSum& y) {
  return x.p_ == y.p_ && x.M_ == y.M_ && x.t_ == y.t_ && x.terms_ == y.terms_;
}

std::string FormalSum::dump() const {
  std::ostringstream os;
  for (const auto& [key, v] : terms_) {
    const Mat2 m = key.matrix(p_);
    os << m.a.get_str() << ' ' << m.b.get_str() << ' ' << m.c.get_str() << ' ' << m.d.get_str() << " | twist="
       << v.twist_halves() << " | " << v.sparse_str() << '\n';
  }
  return os.str();
}

void SurrogateParams::validate() const {
  require_prime(p);
  if (p <= 3) throw std::invalid_argument("surrogate parameters need p > 3");
  if (t < 0 || delta < 0 || eta < 0 || alpha < 0) throw std::invalid_argument("surrogate parameters must be >= 0");
  if (alpha > delta) throw std::invalid_argument("surrogate parameters need alpha <= delta");
  if (alpha + delta > t) throw std::invalid_argument("surrogate parameters need alpha + delta <= t");
  if (precision() < static_cast<unsigned>(t + delta + 2)) {
    throw std::invalid_argument("surrogate parameters need M >= t + delta + 2");
  }
}

std::pair<SymPoly, SymPoly> h_polys(const SurrogateParams& sp, long alpha) {
  sp.validate();
  if (alpha < 0 || alpha > sp.delta) throw std::invalid_argument("h_polys needs 0 <= alpha <= delta");
  const unsigned M = sp.precision();
  SymPoly h = SymPoly::monomial(sp.p, M, sp.t, alpha, 1);
  h.add_to(alpha + sp.delta, -1);
  SymPoly star = act(Mat2{0, 1, 1, 0}, h);
  return {h, star};
}

FormalSum hecke_T(const FormalSum& input, const SurrogateParams& sp) {
  sp.validate();
  const long p = sp.p;
  const unsigned M = sp.precision();
  if (input.p() != p || input.precision() != M) throw std::invalid_argument("hecke_T: parameter mismatch");
  std::vector<Integer> lifts;
  for (long mu = 0; mu < p; ++mu) lifts.push_back(padic::teichmuller_lift(mu, p, M));
  FormalSum out(p, M, input.degree());
  for (const auto& [key, v] : input.terms()) {
    const Mat2 gamma = key.matrix(p);
    for (long mu = 0; mu < p; ++mu) {
      const Rational lift(lifts[static_cast<std::size_t>(mu)]);
      out.add(gamma * Mat2{p, lift, 0, 1}, act(Mat2{1, -lift, 0, p}, v));
    }
    out.add(gamma * Mat2{1, 0, 0, p}, act(Mat2{p, 0, 0, 1}, v));
  }
  return out;
}

namespace {

Integer signed_power(const Integer& base, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

// Exponent n reduced into [1, p-1] for n > 0; 0 stays 0.
long overline(long n, long p) { return n <= 0 ? n : (n - 1) % (p - 1) + 1; }

}  // namespace

ExpansionReport verify_T_expansion(const SurrogateParams& sp, long alpha) {
  sp.validate();
  const long p = sp.p;
  const long t = sp.t;
  const long delta = sp.delta;
  const unsigned M = sp.precision();
  const auto [h, star] = h_polys(sp, alpha);
  FormalSum input(p, M, t);
  input.add(Mat2::identity(), h);
  const FormalSum actual = hecke_T(input, sp);

  FormalSum expected(p, M, t);
  FormalSum merged(p, M, t);
  for (long mu = 0; mu < p; ++mu) {
    const Integer lift = padic::teichmuller_lift(mu, p, M);
    const Integer neg = -lift;
    SymPoly a_mu(p, M, t, -t);
    SymPoly a_merged(p, M, t, -t);
    for (long xi = 0; xi <= t - alpha; ++xi) {
      // x^alpha (-[mu] x + p y)^{t-alpha} contributes to x^{t-xi} y^xi.
      Integer c = binomial(t - alpha, xi) * signed_power(neg, t - alpha - xi);
      if (xi <= t - alpha - delta) c -= binomial(t - alpha - delta, xi) * signed_power(neg, t - alpha - delta - xi);
      a_mu.add_to(t - xi, c * ipow(p, static_cast<unsigned long>(xi)));
      const Integer m = signed_power(neg, overline(t - alpha - xi, p)) *
                        (binomial(t - alpha, xi) - binomial(t - alpha - delta, xi));
      a_merged.add_to(t - xi, m * ipow(p, static_cast<unsigned long>(xi)));
    }
    expected.add(Mat2{p, Rational(lift), 0, 1}, a_mu);
    merged.add(Mat2{p, Rational(lift), 0, 1}, a_merged);
  }
  SymPoly a(p, M, t, -t);
  a.add_to(alpha, ipow(p, static_cast<unsigned long>(alpha)));
  a.add_to(alpha + delta, -ipow(p, static_cast<unsigned long>(alpha + delta)));
  expected.add(Mat2{1, 0, 0, p}, a);
  merged.add(Mat2{1, 0, 0, p}, a);

  ExpansionReport out;
  out.terms = actual.size();
  out.matches = (actual == expected);
  out.merged_exponent_form_matches = (actual == merged);
  if (!out.matches) {
    std::istringstream lhs(actual.dump());
    std::istringstream rhs(expected.dump());
    std::string l, r;
    while (true) {
      const bool more_l = static_cast<bool>(std::getline(lhs, l));
      const bool more_r = static_cast<bool>(std::getline(rhs, r));
      if (!more_l && !more_r) break;
      if (!more_l) l = "<none>";
      if (!more_r) r = "<none>";
      if (l != r) {
        out.first_difference = "computed: " + l + " / expected: " + r;
        break;
      }
    }
  }
  return out;
}

std::map<long, Rational> theta_multiple_coeffs(const SurrogateParams& sp, long alpha, long eta, const Rational& scalar) {
  const long p = sp.p;
  require_prime(p);
  const long t = sp.t;
  if (alpha < 0 || eta < 0) throw std::invalid_argument("theta_multiple_coeffs needs alpha, eta >= 0");
  const long y_exponent = t - alpha * (p + 1) - eta * (p - 1);
  if (y_exponent < 0) throw std::invalid_argument("theta_multiple_coeffs needs alpha (p+1) + eta (p-1) <= t");
  Rational unit = 1;
  for (long i = 0; i < alpha; ++i) unit *= 1 - p;
  HomPoly poly = HomPoly::theta(p).pow(alpha) * HomPoly::monomial(eta * (p - 1), y_exponent, scalar / unit);
  std::map<long, Rational> out;
  for (long e = 0; e <= t; ++e) {
    const Rational& c = poly.coeff(e);
    if (c == 0) continue;
    if ((e - alpha) % (p - 1) != 0) throw std::logic_error("theta multiple left the x^{j(p-1)+alpha} family");
    out[(e - alpha) / (p - 1)] = c;
  }
  return out;
}

SymPoly theta_power(long p, unsigned M, long e) {
  SymPoly theta(p, M, p + 1);
  theta.set(1, 1);
  theta.add_to(p, -1);
  SymPoly out = SymPoly::monomial(p, M, 0, 0, 1);
  for (long i = 0; i < e; ++i) out = multiply(out, theta);
  return out;
}

bool divisible_by_theta_power_mod_p(const SymPoly& f, long alpha) {
  const long p = f.p();
  const long t = f.degree();
  if (alpha < 0) throw std::invalid_argument("negative theta power");
  if (alpha == 0) return true;
  if (alpha * (p + 1) > t) return f.is_zero() || std::all_of(f.coeffs().begin(), f.coeffs().end(), [p](const Integer& c) {
                                 return mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
                               });
  const Integer mod = p;
  // Long division of the coefficient vector (by x-exponent) mod p: theta^alpha
  // as a polynomial in x with y = 1 after peeling y^alpha off both sides.
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : rem) c = mod_floor(c, mod);
  const SymPoly th = theta_power(p, 1, alpha);
  std::vector<Integer> div(th.coeffs().begin(), th.coeffs().end());
  long top = static_cast<long>(div.size()) - 1;
  while (top >= 0 && div[static_cast<std::size_t>(top)] == 0) --top;
  Integer lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), div[static_cast<std::size_t>(top)].get_mpz_t(), mod.get_mpz_t());
  // The quotient has degree t - alpha (p + 1) in x and y jointly, so only
  // shifts s in [0, t - alpha (p + 1)] are allowed.
  const long max_shift = t - alpha * (p + 1);
  for (long s = max_shift; s >= 0; --s) {
    const long pos = s + top;
    const Integer q = mod_floor(rem[static_cast<std::size_t>(pos)] * lead_inv, mod);
    if (q == 0) continue;
    for (long i = 0; i <= top; ++i) {
      auto& cell = rem[static_cast<std::size_t>(s + i)];
      cell = mod_floor(cell - q * div[static_cast<std::size_t>(i)], mod);
    }
  }
  for (const auto& c : rem) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace slopekit::hecke
