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


#include "slopekit/modular_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "slopekit/newton.hpp"

namespace slopekit::mf {

QExpansion QExpansion::one(std::size_t prec) {
  std::vector<Rational> c(prec);
  if (prec > 0) c[0] = 1;
  return QExpansion(0, std::move(c));
}

bool QExpansion::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

QExpansion operator+(const QExpansion& f, const QExpansion& g) {
  if (f.weight_ != g.weight_) throw std::invalid_argument("adding q-expansions of different weights");
  const std::size_t n = std::min(f.prec(), g.prec());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs_[i] + g.coeffs_[i];
  return QExpansion(f.weight_, std::move(c));
}

QExpansion operator-(const QExpansion& f, const QExpansion& g) { return f + Rational(-1) * g; }

QExpansion operator*(const QExpansion& f, const QExpansion& g) {
  const std::size_t n = std::min(f.prec(), g.prec());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (g.coeffs_[j] != 0) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return QExpansion(f.weight_ + g.weight_, std::move(c));
}

QExpansion operator*(const Rational& s, const QExpansion& f) {
  std::vector<Rational> c(f.coeffs_);
  for (auto& x : c) x *= s;
  return QExpansion(f.weight_, std::move(c));
}

QExpansion QExpansion::truncated(std::size_t prec) const {
  if (prec > coeffs_.size()) throw std::invalid_argument("cannot raise the precision of a q-expansion");
  return QExpansion(weight_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(prec)));
}

QExpansion QExpansion::pow(unsigned e) const {
  QExpansion out = one(prec());
  QExpansion base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

std::vector<Rational> bernoulli_numbers(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli_numbers needs n >= 0");
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (long m = 1; m <= n; ++m) {
    Rational s = 0;
    for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
  }
  return b;
}

Integer divisor_sigma(long e, long n) {
  if (n < 1) throw std::invalid_argument("divisor_sigma needs n >= 1");
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += ipow(d, static_cast<unsigned long>(e));
    if (d != n / d) s += ipow(n / d, static_cast<unsigned long>(e));
  }
  return s;
}

QExpansion eisenstein(long k, std::size_t prec) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein needs even k >= 4, got " + std::to_string(k));
  const Rational bk = bernoulli_numbers(k).back();
  const Rational factor = Rational(-2 * k) / bk;
  std::vector<Rational> c(prec);
  if (prec > 0) c[0] = 1;
  for (std::size_t n = 1; n < prec; ++n) c[n] = factor * Rational(divisor_sigma(k - 1, static_cast<long>(n)));
  return QExpansion(k, std::move(c));
}

QExpansion delta(std::size_t prec) {
  if (prec < 2) throw std::invalid_argument("delta needs prec >= 2");
  // prod (1 - q^n) by Euler's pentagonal series, then the 24th power.
  std::vector<Rational> eta(prec);
  for (long m = 0;; ++m) {
    bool any = false;
    for (long g : {m * (3 * m - 1) / 2, m * (3 * m + 1) / 2}) {
      if (g < static_cast<long>(prec)) {
        any = true;
        eta[static_cast<std::size_t>(g)] = (m % 2 == 0) ? 1 : -1;
      }
    }
    if (!any) break;
  }
  const QExpansion e24 = QExpansion(0, std::move(eta)).pow(24);
  std::vector<Rational> c(prec);
  for (std::size_t n = 1; n < prec; ++n) c[n] = e24[n - 1];
  return QExpansion(12, std::move(c));
}

long dim_cusp_level1(long k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("dim_cusp needs even k >= 0, got " + std::to_string(k));
  if (k < 12) return 0;
  return k / 12 - (k % 12 == 2 ? 1 : 0);
}

namespace {

// Kronecker symbol (d / q) for d in {-3, -4} and q prime.
long kronecker(long d, long q) {
  if (q == 2) return d == -3 ? -1 : 0;
  if (q == 3 && d == -3) return 0;
  if (d == -4) return q % 4 == 1 ? 1 : -1;
  return q % 3 == 1 ? 1 : -1;
}

}  // namespace

long dim_cusp(long k, long level) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("dim_cusp needs even k >= 2, got " + std::to_string(k));
  if (level == 1) return dim_cusp_level1(k);
  require_prime(level);
  const Rational index = level + 1;
  const long cusps = 2;
  const long e2 = 1 + kronecker(-4, level);
  const long e3 = 1 + kronecker(-3, level);
  const Rational genus = Rational(1) + index / 12 - Rational(e2) / 4 - Rational(e3) / 3 - Rational(cusps) / 2;
  if (genus.get_den() != 1) throw std::logic_error("non-integral genus");
  const long g = genus.get_num().get_si();
  if (k == 2) return g;
  return (k - 1) * (g - 1) + (k / 2 - 1) * cusps + e2 * (k / 4) + e3 * (k / 3);
}

std::vector<QExpansion> miller_basis(long k, std::size_t prec) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("miller_basis needs even k >= 0");
  const long d = dim_cusp_level1(k);
  if (d == 0) return {};
  if (prec <= static_cast<std::size_t>(d)) {
    throw std::invalid_argument("miller_basis needs prec > dim = " + std::to_string(d));
  }
  const QExpansion dl = delta(prec);
  const QExpansion e4 = eisenstein(4, prec);
  const QExpansion e6 = eisenstein(6, prec);
  std::vector<QExpansion> basis;
  QExpansion dpow = dl;
  for (long i = 1; i <= d; ++i) {
    const long rest = k - 12 * i;
    const long b = (rest % 4 == 0) ? 0 : 1;
    const long a = (rest - 6 * b) / 4;
    if (a < 0) throw std::logic_error("no Miller monomial in weight " + std::to_string(k));
    QExpansion f = dpow * e4.pow(static_cast<unsigned>(a));
    if (b == 1) f = f * e6;
    basis.push_back(std::move(f));
    if (i < d) dpow = dpow * dl;
  }
  for (long i = d - 1; i >= 0; --i) {
    for (long j = i + 1; j < d; ++j) {
      const Rational c = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
      if (c != 0) basis[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)] - c * basis[static_cast<std::size_t>(j)];
    }
  }
  return basis;
}

QExpansion apply_hecke(const QExpansion& f, long p, std::size_t out_prec) {
  require_prime(p);
  if (out_prec > 0 && (out_prec - 1) * static_cast<std::size_t>(p) >= f.prec()) {
    throw PrecisionError("T_" + std::to_string(p) + " to " + std::to_string(out_prec) + " terms needs prec >= " +
                         std::to_string((out_prec - 1) * static_cast<std::size_t>(p) + 1));
  }
  const Rational pk = rpow(p, f.weight() - 1);
  std::vector<Rational> c(out_prec);
  for (std::size_t n = 0; n < out_prec; ++n) {
    c[n] = f[n * static_cast<std::size_t>(p)];
    if (n % static_cast<std::size_t>(p) == 0) c[n] += pk * f[n / static_cast<std::size_t>(p)];
  }
  return QExpansion(f.weight(), std::move(c));
}

HeckeMatrix hecke_matrix(long p, long k) {
  require_prime(p);
  HeckeMatrix h;
  h.p = p;
  h.k = k;
  const long d = dim_cusp_level1(k);
  h.dim = static_cast<std::size_t>(d);
  h.entries = IntMatrix(h.dim, h.dim);
  if (d == 0) return h;
  const std::size_t prec = static_cast<std::size_t>(p * d + 1);
  const auto basis = miller_basis(k, prec);
  for (std::size_t i = 0; i < h.dim; ++i) {
    const QExpansion tf = apply_hecke(basis[i], p, h.dim + 1);
    for (std::size_t j = 0; j < h.dim; ++j) {
      const Rational& c = tf[j + 1];
      if (c.get_den() != 1) throw std::logic_error("non-integral Hecke matrix entry");
      h.entries(i, j) = c.get_num();
    }
  }
  return h;
}

std::vector<Rational> slopes(const HeckeMatrix& h) {
  if (h.dim == 0) return {};
  const auto cp = charpoly(h.entries);
  const auto poly = padic::newton_polygon(std::span<const Integer>(cp), h.p);
  if (poly.zero_roots > 0) {
    throw std::domain_error("T_" + std::to_string(h.p) + " has eigenvalue 0 in weight " + std::to_string(h.k));
  }
  return poly.root_valuations();
}

std::vector<Rational> slopes(long p, long k) {
  if (k < 12 || k % 2 != 0) return {};
  return slopes(hecke_matrix(p, k));
}

}  // namespace slopekit::mf
