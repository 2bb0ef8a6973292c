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


// Acceptance run: one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"
#include "slopekit/annihilator.hpp"
#include "slopekit/binomial_matrix.hpp"
#include "slopekit/bounds.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/measures.hpp"
#include "slopekit/modular_forms.hpp"
#include "slopekit/padic.hpp"
#include "slopekit/sym_hecke.hpp"

using namespace slopekit;

namespace {

const std::vector<long> kSweepPrimes{5, 7, 11, 13};

struct Limits {
  static constexpr double carries = 60;
  static constexpr double lambda = 30;
  static constexpr double matrix = 300;
  static constexpr double interior = 600;
  static constexpr double rows_and_rho = 300;
  static constexpr double bounds = 900;
  static constexpr double hecke = 60;
  static constexpr double forms = 120;
  static constexpr double measures = 600;
};

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit) v.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (v.ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << " (" << secs << " s)";
  if (!v.detail.empty()) line << " : " << v.detail;
  std::cout << line.str() << std::endl;
  if (!v.ok) ++failures;
}

std::string tuple(long p, long r, long a) {
  return "p=" + std::to_string(p) + " r=" + std::to_string(r) + " alpha=" + std::to_string(a);
}

// Shared by the bound and integrality criteria.
std::vector<comb::SweepTuple> sweep_results;

hecke::FormalSum random_sum(std::mt19937& rng, long p, unsigned M, long t) {
  std::uniform_int_distribution<long> n_dist(-1, 2);
  std::uniform_int_distribution<long> small(0, 20);
  std::uniform_int_distribution<long> coef(0, 1000000);
  std::uniform_int_distribution<int> terms(1, 3);
  hecke::FormalSum s(p, M, t);
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    const long n = n_dist(rng);
    const Rational a = Rational(small(rng)) / rpow(p, std::max(0L, -n) + (small(rng) % 2));
    hecke::SymPoly v(p, M, t);
    for (long e = 0; e <= t; ++e) v.set(e, coef(rng));
    s.add(hecke::Mat2{rpow(p, n), a, 0, 1}, v);
  }
  return s;
}

hecke::Mat2 random_group_element(std::mt19937& rng, long p) {
  const std::vector<hecke::Mat2> gens{
      {1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}, {p, 0, 0, 1}, {1, 0, 0, p}, {2, 1, 1, 1}, {1, Rational(1) / p, 0, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  return gens[pick(rng)] * gens[pick(rng)];
}

std::string cli_output(std::vector<std::string> args, const std::string& jobs) {
  args.insert(args.end(), {"--jobs", jobs});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

}  // namespace

int main() {
  criterion(1, "carry-count valuation of C(a, b) matches factorization and stays <= floor(log_p a), a <= 2000",
            Limits::carries, [] {
              Verdict v;
              long pairs = 0;
              for (const auto& rep : comb::verify_carry_bound({2, 3, 5, 7, 11, 13}, 2000)) {
                pairs += rep.pairs;
                if (!rep.holds()) {
                  v.fail("p=" + std::to_string(rep.p) + " a=" + std::to_string(rep.first_counterexample->first) +
                         " b=" + std::to_string(rep.first_counterexample->second));
                }
              }
              if (v.ok) v.detail = std::to_string(pairs) + " pairs";
              return v;
            });

  criterion(2, "Lambda system residual vanishes for R <= 30, alpha <= 60; R = 1 closed forms", Limits::lambda, [] {
    Verdict v;
    long tables = 0;
    for (long p : kSweepPrimes) {
      for (long R = 0; R <= 30; ++R) {
        for (long alpha : {R, (R + 60) / 2, 60L}) {
          const auto t = comb::lambda_coefficients(p, R, alpha);
          ++tables;
          if (!comb::lambda_residual(t).is_zero()) v.fail("residual p=" + std::to_string(p) + " R=" + std::to_string(R));
          if (R <= 12 && comb::lambda_by_interpolation(p, R, alpha).by_offset != t.by_offset) {
            v.fail("routes disagree p=" + std::to_string(p) + " R=" + std::to_string(R));
          }
        }
      }
      for (long alpha = 1; alpha <= 60; ++alpha) {
        const auto t = comb::lambda_coefficients(p, 1, alpha);
        if (t.at(alpha - 1) != Rational(-1) / (p - 1)) v.fail("Lambda_1(alpha, alpha-1) at alpha=" + std::to_string(alpha));
        if (t.at(alpha) != Rational(p - 1 + alpha) / (p - 1)) v.fail("Lambda_1(alpha, alpha) at alpha=" + std::to_string(alpha));
      }
    }
    if (v.ok) v.detail = std::to_string(tables) + " tables";
    return v;
  });

  criterion(3, "binomial matrix: entry revision, factorization, det = (p-1)^{R(R-1)/2}, full rank mod p", Limits::matrix, [] {
    Verdict v;
    long tuples = 0;
    for (long p : kSweepPrimes) {
      for (long R = 1; R <= 12; ++R) {
        for (long gamma : {0L, 1L, p, 3 * p + 2}) {
          const auto rep = comb::factor_and_rank_checks(p, R, gamma);
          if (!rep.ok()) v.fail("p=" + std::to_string(p) + " R=" + std::to_string(R) + ": " + rep.failure());
        }
      }
      for (long r = 1; r <= 200; ++r) {
        for (long a = 0; a <= comb::rho_of(p, r); ++a) {
          ++tuples;
          if (!comb::check_matrix_suite(p, r, a).ok()) v.fail(tuple(p, r, a));
        }
      }
    }
    if (v.ok) {
      v.detail = std::to_string(tuples) +
                 " tuples; note: det [C(i(p-1), j)] is (p-1)^{R(R-1)/2}, which equals (p-1)^R only at R = 3";
    }
    return v;
  });

  criterion(4, "interior annihilator: residual zero, vartheta_w = 0 below alpha, v(vartheta_alpha) = eps, v >= eps to 2 rho",
            Limits::interior, [] {
              Verdict v;
              long tuples = 0;
              for (long p : kSweepPrimes) {
                for (long r = 1; r <= 200; ++r) {
                  for (long a = 0; a <= comb::rho_of(p, r) - 1; ++a) {
                    ++tuples;
                    const auto sys = comb::build_interior_annihilator(p, r, a);
                    const auto th = comb::check_vartheta(sys);
                    if (!sys.residual_zero) v.fail("residual " + tuple(p, r, a));
                    if (!th.vanishes_below_alpha || !th.exact_at_alpha || !th.bounded_in_window) {
                      v.fail(tuple(p, r, a) + " " + th.failure);
                    }
                  }
                }
              }
              if (v.ok) v.detail = std::to_string(tuples) + " tuples";
              return v;
            });

  criterion(5, "constant-row vanishing and rho-case annihilator residuals vanish, r <= 200", Limits::rows_and_rho, [] {
    Verdict v;
    long rows = 0;
    long rho = 0;
    for (auto variant : {comb::CVariant::general, comb::CVariant::rho_case}) {
      for (const auto& t : comb::admissible_tuples(variant, kSweepPrimes, 200)) {
        ++rows;
        if (!comb::verify_row_vanishing(t.p, t.r, t.alpha, variant).holds) v.fail("row vanishing " + tuple(t.p, t.r, t.alpha));
      }
    }
    for (long p : kSweepPrimes) {
      for (long r = p - 2; r <= 200; r += p + 1) {
        ++rho;
        const auto sys = comb::build_rho_annihilator(p, r);
        const auto rc = comb::check_rho_case(sys);
        if (!sys.residual_zero) v.fail("rho-case residual p=" + std::to_string(p) + " r=" + std::to_string(r));
        if (!rc.scaled_equality || !rc.congruent) v.fail("rho-case D_0 p=" + std::to_string(p) + " r=" + std::to_string(r));
      }
    }
    if (v.ok) v.detail = std::to_string(rows) + " row tuples, " + std::to_string(rho) + " rho-case systems";
    return v;
  });

  criterion(6, "six strict valuation bounds on every admissible tuple, p in {5,7,11,13}, r <= 400", Limits::bounds, [] {
    Verdict v;
    sweep_results = comb::bound_sweep(kSweepPrimes, 400, comb::AlphaRange::standard, 1);
    std::map<comb::Bound, std::optional<padic::ExtendedValuation>> margins;
    std::map<comb::Bound, long> checked;
    for (const auto& s : sweep_results) {
      for (const auto& rep : s.bounds) {
        if (rep.verdict == comb::Verdict::fails) v.fail(comb::to_string(rep.bound) + " " + tuple(rep.p, rep.r, rep.alpha));
        if (rep.verdict != comb::Verdict::holds) continue;
        ++checked[rep.bound];
        auto& m = margins[rep.bound];
        if (auto here = rep.min_margin(); here && (!m || *here < *m)) m = *here;
      }
    }
    std::string detail = std::to_string(sweep_results.size()) + " tuples; min margins:";
    for (comb::Bound b : comb::all_bounds()) {
      detail += " " + comb::to_string(b) + "=" + (margins[b] ? margins[b]->str() : std::string("n/a")) + "(" +
                std::to_string(checked[b]) + ")";
      if (checked[b] == 0) v.fail("no tuple exercised " + comb::to_string(b));
    }
    if (v.ok) v.detail = detail;
    return v;
  });

  criterion(7, "v_p(C') >= 0 and v_p(C'') >= 0 with their defining identities across the bound sweep", Limits::bounds, [] {
    Verdict v;
    if (sweep_results.empty()) sweep_results = comb::bound_sweep(kSweepPrimes, 400, comb::AlphaRange::standard, 1);
    for (const auto& s : sweep_results) {
      const auto& in = s.integrality;
      if (!in.ok()) v.fail(tuple(s.tuple.p, s.tuple.r, s.tuple.alpha));
    }
    if (v.ok) v.detail = std::to_string(sweep_results.size()) + " tuples";
    return v;
  });

  criterion(8, "T expansion on p in {5,7}, t <= 8, delta <= 4; linearity and equivariance on 100 random sums", Limits::hecke, [] {
    Verdict v;
    long cells = 0;
    for (long p : {5L, 7L}) {
      for (long t = 0; t <= 8; ++t) {
        for (long d = 0; d <= 4; ++d) {
          for (long a = 0; a <= d && a + d <= t; ++a) {
            hecke::SurrogateParams sp;
            sp.p = p;
            sp.t = t;
            sp.delta = d;
            sp.alpha = a;
            ++cells;
            const auto rep = hecke::verify_T_expansion(sp, a);
            if (!rep.matches) v.fail("p=" + std::to_string(p) + " t=" + std::to_string(t) + " delta=" + std::to_string(d) +
                                     " alpha=" + std::to_string(a) + ": " + rep.first_difference);
          }
        }
      }
    }
    std::mt19937 rng(20261016);
    for (int n = 0; n < 100; ++n) {
      const long p = (n % 2 == 0) ? 5 : 7;
      hecke::SurrogateParams sp;
      sp.p = p;
      sp.t = 1 + n % 6;
      sp.delta = std::min<long>(sp.t, 1 + n % 3);
      sp.M = 12;
      const unsigned M = sp.precision();
      const auto s1 = random_sum(rng, p, M, sp.t);
      const auto s2 = random_sum(rng, p, M, sp.t);
      const Rational scale = Rational(1 + n) / Rational(p + 1);
      const auto lhs = hecke::hecke_T(s1 * scale + s2, sp);
      const auto rhs = hecke::hecke_T(s1, sp) * scale + hecke::hecke_T(s2, sp);
      if (!(lhs == rhs)) v.fail("linearity, instance " + std::to_string(n));
      const auto g = random_group_element(rng, p);
      if (!(hecke::hecke_T(s1.translate(g), sp) == hecke::hecke_T(s1, sp).translate(g))) {
        v.fail("equivariance, instance " + std::to_string(n) + " g=" + g.str());
      }
    }
    if (v.ok) v.detail = std::to_string(cells) + " expansion cells, 100 random instances";
    return v;
  });

  criterion(9, "1728 Delta = E4^3 - E6^2 to 500 terms; slopes(2,12)={3}, slopes(5,12)={1}, slopes(59,16)={s>=1}",
            Limits::forms, [] {
              Verdict v;
              const auto e4 = mf::eisenstein(4, 500);
              const auto e6 = mf::eisenstein(6, 500);
              if (!(Rational(1728) * mf::delta(500) == e4 * e4 * e4 - e6 * e6)) v.fail("Delta identity");
              if (mf::slopes(2, 12) != std::vector<Rational>{3}) v.fail("slopes(2,12)");
              if (mf::slopes(5, 12) != std::vector<Rational>{1}) v.fail("slopes(5,12)");
              const auto s = mf::slopes(59, 16);
              if (s.size() != 1 || s[0] < 1) {
                v.fail("slopes(59,16)");
                return v;
              }
              const auto m = measure::supersingularity_measure(59, 16, false);
              const auto mid = measure::mass_in_middle(m, measure::middle_interval_bound(59, 16));
              if (mid.count != 2) v.fail("p=59 k=16 is not a middle-interval exception");
              if (v.ok) v.detail = "slope at p=59, k=16 is " + to_string(s[0]) + ", masses " + to_string(m.masses[0]) + ", " +
                                   to_string(m.masses[1]);
              return v;
            });

  criterion(10, "p=5 oldform middle mass 0 for even k in [12,200]; p=59, k=16 has 2 masses in (1/60, 59/60); symmetry",
            Limits::measures, [] {
              Verdict v;
              const auto reg = measure::is_regular(5);
              if (!reg.regular) v.fail("p=5 not regular");
              const auto prof = measure::middle_mass_profile(5, 12, 200, false, 1);
              if (prof.cutoff) v.fail("guard: " + *prof.cutoff);
              if (prof.rows.size() != 95) v.fail("expected 95 weights, got " + std::to_string(prof.rows.size()));
              long masses = 0;
              for (const auto& row : prof.rows) {
                masses += static_cast<long>(row.measure.masses.size());
                if (row.middle.count != 0) v.fail("p=5 k=" + std::to_string(row.k) + " count " + std::to_string(row.middle.count));
                if (!row.measure.is_symmetric()) v.fail("asymmetric at p=5 k=" + std::to_string(row.k));
                if (static_cast<long>(row.measure.masses.size()) != row.dim_old) v.fail("mass count at k=" + std::to_string(row.k));
              }
              const auto m59 = measure::supersingularity_measure(59, 16, false);
              const auto b59 = measure::middle_interval_bound(59, 16);
              if (b59.left_end != Rational(1) / 60) v.fail("p=59 k=16 left end " + to_string(b59.left_end));
              if (measure::mass_in_middle(m59, b59).count != 2) v.fail("p=59 k=16 middle count");
              if (!m59.is_symmetric()) v.fail("asymmetric at p=59 k=16");
              if (v.ok) {
                v.detail = "p=5 regular (no level-one cusp forms in weights <= 6); " + std::to_string(masses) +
                           " oldform masses checked";
              }
              return v;
            });

  criterion(11, "byte-identical output across repeated runs with --jobs 4 and against --jobs 1", 600, [] {
    Verdict v;
    const std::vector<std::vector<std::string>> commands{
        {"verify", "bounds", "--r-max", "120"},
        {"verify", "integrality", "--r-max", "120", "--format", "json"},
        {"verify", "matrix", "--r-max", "80"},
        {"verify", "interior", "--r-max", "80"},
        {"verify", "constant-rows", "--r-max", "120"},
        {"verify", "determinant", "--R-max", "8"},
        {"hecke-check", "--t-max", "6"},
        {"slopes", "--p", "2,3,5,59", "--k", "12..60"},
        {"measure", "--p", "5,59", "--k", "12..80", "--include-newforms", "--format", "json"},
    };
    for (const auto& cmd : commands) {
      const std::string a = cli_output(cmd, "4");
      const std::string b = cli_output(cmd, "4");
      const std::string c = cli_output(cmd, "1");
      std::string name;
      for (const auto& s : cmd) name += s + " ";
      if (a != b) v.fail("repeat differs: " + name);
      if (a != c) v.fail("jobs 4 vs 1 differs: " + name);
      if (a.rfind("0\n", 0) != 0) v.fail("nonzero exit: " + name);
    }
    if (v.ok) v.detail = std::to_string(commands.size()) + " commands";
    return v;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
