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


#include "app.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "slopekit/annihilator.hpp"
#include "slopekit/binomial_matrix.hpp"
#include "slopekit/bounds.hpp"
#include "slopekit/lambda.hpp"
#include "slopekit/measures.hpp"
#include "slopekit/modular_forms.hpp"
#include "slopekit/padic.hpp"
#include "slopekit/parallel.hpp"
#include "slopekit/report.hpp"
#include "slopekit/sym_hecke.hpp"

namespace slopekit::cli {

namespace {

using report::Table;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<long> primes;
  std::string k_range;
  std::optional<long> r;
  std::optional<long> alpha;
  long r_max = 0;
  long a_max = 2000;
  long big_r_max = 12;
  long R = 0;
  long t_max = 8;
  long delta_max = 4;
  long max_dim = measure::kDefaultMaxDimension;
  bool extended_alpha = false;
  bool include_newforms = false;
  std::string format = "csv";
  std::string out_path;
  unsigned jobs = 1;
};

struct Outcome {
  std::vector<Table> tables;
  bool counterexample = false;
  std::string first_counterexample;
  bool guard_tripped = false;

  void fail(const std::string& what) {
    if (!counterexample) first_counterexample = what;
    counterexample = true;
  }
};

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }
std::string str(long v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const padic::ExtendedValuation& v) { return v.str(); }

std::string tuple_str(long p, long r, long alpha) {
  return "p=" + std::to_string(p) + " r=" + std::to_string(r) + " alpha=" + std::to_string(alpha);
}

std::vector<long> primes_or(const Config& c, std::vector<long> fallback) {
  std::vector<long> ps = c.primes.empty() ? std::move(fallback) : c.primes;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (long p : ps) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  }
  return ps;
}

void require_large_primes(const std::vector<long>& ps) {
  for (long p : ps) {
    if (p <= 3) throw UsageError("this check needs primes p > 3, got " + std::to_string(p));
  }
}

std::vector<long> even_weights(const Config& c) {
  if (c.k_range.empty()) throw UsageError("--k is required");
  std::vector<long> out;
  for (long k : parse_range(c.k_range)) {
    if (k % 2 == 0) out.push_back(k);
  }
  if (out.empty()) throw UsageError("--k selects no even weight");
  return out;
}

void note_odd_weights(const Config& c, Table& t) {
  std::string odd;
  for (long k : parse_range(c.k_range)) {
    if (k % 2 != 0) odd += (odd.empty() ? "" : " ") + str(k);
  }
  if (!odd.empty()) t.notes.push_back("odd weights skipped (no level-one forms): " + odd);
}

// ---- verify targets -------------------------------------------------------

Outcome verify_carries(const Config& c) {
  const auto ps = primes_or(c, {2, 3, 5, 7, 11, 13});
  if (c.a_max < 1) throw UsageError("--a-max must be >= 1");
  Outcome o;
  Table t{"binomial-carries", {"p", "a_max", "pairs", "max_valuation", "bound_violations", "disagreements", "verdict"}};
  for (const auto& rep : comb::verify_carry_bound(ps, c.a_max)) {
    t.add_row({str(rep.p), str(rep.a_max), str(rep.pairs), str(rep.max_valuation), str(rep.bound_violations),
               str(rep.disagreements), rep.holds() ? "holds" : "fails"});
    if (!rep.holds()) {
      const auto [a, b] = *rep.first_counterexample;
      o.fail("p=" + str(rep.p) + " a=" + str(a) + " b=" + str(b));
    }
  }
  t.notes.push_back("carry count vs exact factorization, and v_p(C(a, b)) <= floor(log_p a)");
  o.tables.push_back(std::move(t));
  return o;
}

std::vector<std::string> bound_row(const comb::BoundReport& rep) {
  std::string index, vx0, vother, margin;
  if (!rep.witnesses.empty()) {
    const auto worst = std::min_element(rep.witnesses.begin(), rep.witnesses.end(),
                                        [](const auto& a, const auto& b) { return a.margin() < b.margin(); });
    index = str(worst->index);
    vx0 = str(worst->v_x0);
    vother = str(worst->v_other);
    margin = str(worst->margin());
  }
  return {comb::to_string(rep.bound), str(rep.p),    str(rep.r), str(rep.alpha), index, vx0, vother, margin,
          comb::to_string(rep.verdict), rep.note};
}

Table bound_table(const std::string& title) {
  return Table{title, {"check", "p", "r", "alpha", "index", "v_x0", "v_other", "margin", "verdict", "note"}};
}

void bound_summary(Table& t, const std::map<comb::Bound, std::pair<long, std::optional<padic::ExtendedValuation>>>& s) {
  for (const auto& [b, entry] : s) {
    t.notes.push_back(comb::to_string(b) + ": " + str(entry.first) + " tuples, minimum margin " +
                      (entry.second ? entry.second->str() : std::string("n/a")));
  }
}

Outcome verify_bounds(const Config& c, std::vector<comb::Bound> which) {
  Outcome o;
  Table t = bound_table("valuation-bounds");
  std::map<comb::Bound, std::pair<long, std::optional<padic::ExtendedValuation>>> summary;
  auto record = [&](const comb::BoundReport& rep) {
    t.add_row(bound_row(rep));
    if (rep.verdict == comb::Verdict::fails) o.fail(comb::to_string(rep.bound) + " " + tuple_str(rep.p, rep.r, rep.alpha));
    auto& entry = summary[rep.bound];
    if (rep.verdict == comb::Verdict::vacuous) return;
    ++entry.first;
    if (auto m = rep.min_margin(); m && (!entry.second || *m < *entry.second)) entry.second = *m;
  };
  if (c.r || c.alpha) {
    if (!c.r || !c.alpha) throw UsageError("--r and --alpha go together");
    const auto ps = primes_or(c, {});
    if (ps.size() != 1) throw UsageError("a single tuple needs exactly one --p");
    for (comb::Bound b : which) record(comb::verify_bound(b, ps[0], *c.r, *c.alpha));
  } else {
    const auto ps = primes_or(c, {5, 7, 11, 13});
    require_large_primes(ps);
    const long r_max = c.r_max > 0 ? c.r_max : 400;
    const auto range = c.extended_alpha ? comb::AlphaRange::extended : comb::AlphaRange::standard;
    for (const auto& sw : comb::bound_sweep(ps, r_max, range, c.jobs)) {
      for (const auto& rep : sw.bounds) {
        if (std::find(which.begin(), which.end(), rep.bound) != which.end()) record(rep);
      }
    }
  }
  bound_summary(t, summary);
  o.tables.push_back(std::move(t));
  return o;
}

padic::ExtendedValuation min_valuation(const std::vector<Rational>& xs, long p) {
  padic::ExtendedValuation best = padic::ExtendedValuation::infinity();
  for (const auto& x : xs) best = std::min(best, padic::valuation(x, p));
  return best;
}

Outcome verify_integrality(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  const long r_max = c.r_max > 0 ? c.r_max : 400;
  const auto range = c.extended_alpha ? comb::AlphaRange::extended : comb::AlphaRange::standard;
  Outcome o;
  Table t{"integrality",
          {"variant", "p", "r", "alpha", "rho_prime", "min_v_c_prime", "min_v_c_double_prime", "c_prime_identity",
           "c_double_prime_identity", "flipped_exponent_identity", "verdict"}};
  long flipped = 0;
  long total = 0;
  for (const auto& sw : comb::bound_sweep(ps, r_max, range, c.jobs)) {
    const auto& in = sw.integrality;
    const auto& tp = sw.tuple;
    ++total;
    if (in.flipped_exponent_identity) ++flipped;
    t.add_row({tp.variant == comb::CVariant::general ? "general" : "rho", str(tp.p), str(tp.r), str(tp.alpha),
               str(in.rho_prime), str(min_valuation(in.c_prime, tp.p)), str(min_valuation(in.c_double_prime, tp.p)),
               str(in.c_prime_identity), str(in.c_double_prime_identity), str(in.flipped_exponent_identity),
               in.ok() ? "holds" : "fails"});
    if (!in.ok()) o.fail("integrality " + tuple_str(tp.p, tp.r, tp.alpha));
  }
  t.notes.push_back("C'' carries (p-1)^{alpha-j}; with (p-1)^{j-alpha} the identity holds on " + str(flipped) + " of " +
                    str(total) + " tuples");
  o.tables.push_back(std::move(t));
  return o;
}

Outcome verify_constant_rows(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  const long r_max = c.r_max > 0 ? c.r_max : 200;
  std::vector<comb::BoundTuple> tuples = comb::admissible_tuples(comb::CVariant::general, ps, r_max);
  const auto rho = comb::admissible_tuples(comb::CVariant::rho_case, ps, r_max);
  tuples.insert(tuples.end(), rho.begin(), rho.end());
  std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.r, a.alpha) < std::tie(b.p, b.r, b.alpha);
  });
  const auto reports = parallel_map(tuples.size(), c.jobs, [&](std::size_t i) {
    return comb::verify_row_vanishing(tuples[i].p, tuples[i].r, tuples[i].alpha, tuples[i].variant);
  });
  Outcome o;
  Table t{"constant-rows", {"variant", "p", "r", "alpha", "rho_prime", "rows_checked", "verdict"}};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    t.add_row({tuples[i].variant == comb::CVariant::general ? "general" : "rho", str(rep.p), str(rep.r),
               str(rep.alpha), str(rep.rho_prime), str(rep.rows_checked), rep.holds ? "holds" : "fails"});
    if (!rep.holds) o.fail("constant-rows " + tuple_str(rep.p, rep.r, rep.alpha));
  }
  t.notes.push_back("sum_l C_l C(r - alpha + l, i(p-1) + l) = 0 for 1 <= i <= rho'");
  o.tables.push_back(std::move(t));
  return o;
}

Outcome verify_determinant(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  if (c.big_r_max < 1) throw UsageError("--R-max must be >= 1");
  struct Cell {
    long p, R, gamma;
  };
  std::vector<Cell> cells;
  for (long p : ps) {
    for (long R = 1; R <= c.big_r_max; ++R) {
      for (long gamma : {0L, 1L, p - 1, p, 2 * p + 1}) cells.push_back({p, R, gamma});
    }
  }
  const auto reps = parallel_map(cells.size(), c.jobs, [&](std::size_t i) {
    return comb::factor_and_rank_checks(cells[i].p, cells[i].R, cells[i].gamma);
  });
  Outcome o;
  Table t{"determinant",
          {"p", "R", "gamma", "determinant", "expected", "factorization", "unitriangular", "rank_mod_p", "verdict"}};
  for (const auto& rep : reps) {
    t.add_row({str(rep.p), str(rep.R), str(rep.gamma), str(rep.determinant), str(rep.expected_determinant),
               str(rep.factorization_holds), str(rep.shift_unitriangular), str(static_cast<long>(rep.rank_mod_p)),
               rep.ok() ? "holds" : "fails"});
    if (!rep.ok()) o.fail("determinant p=" + str(rep.p) + " R=" + str(rep.R) + ": " + rep.failure());
  }
  t.notes.push_back(
      "det [C(i(p-1), j)] over 0 <= i, j < R is (p-1)^{R(R-1)/2}; the exponent R agrees with it only at R = 3");
  o.tables.push_back(std::move(t));
  return o;
}

std::vector<std::array<long, 3>> alpha_grid(const std::vector<long>& ps, long r_max, long alpha_offset) {
  std::vector<std::array<long, 3>> out;
  for (long p : ps) {
    for (long r = 1; r <= r_max; ++r) {
      const long rho = comb::rho_of(p, r);
      for (long a = 0; a <= rho + alpha_offset; ++a) out.push_back({p, r, a});
    }
  }
  return out;
}

Outcome verify_matrix(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  const auto grid = alpha_grid(ps, c.r_max > 0 ? c.r_max : 200, 0);
  const auto reps = parallel_map(grid.size(), c.jobs, [&](std::size_t i) {
    return comb::check_matrix_suite(grid[i][0], grid[i][1], grid[i][2]);
  });
  Outcome o;
  Table t{"matrix",
          {"p", "r", "alpha", "R", "gamma", "entries_checked", "revision", "row_bound", "scaling", "reversed_shift",
           "rank_mod_p", "verdict"}};
  for (const auto& rep : reps) {
    t.add_row({str(rep.p), str(rep.r), str(rep.alpha), str(rep.R), str(rep.gamma), str(rep.entries_checked),
               str(rep.revision_holds), str(rep.row_bound_holds), str(rep.scaling_holds),
               str(rep.reduced_is_reversed_shift), rep.R == 0 ? "" : str(static_cast<long>(rep.factor.rank_mod_p)),
               rep.ok() ? "holds" : "fails"});
    if (!rep.ok()) o.fail("matrix " + tuple_str(rep.p, rep.r, rep.alpha));
  }
  o.tables.push_back(std::move(t));
  return o;
}

Outcome verify_interior(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  const auto grid = alpha_grid(ps, c.r_max > 0 ? c.r_max : 200, -1);
  struct Row {
    comb::AnnihilatorSystem sys;
    comb::VarthetaReport v;
  };
  const auto rows = parallel_map(grid.size(), c.jobs, [&](std::size_t i) {
    auto sys = comb::build_interior_annihilator(grid[i][0], grid[i][1], grid[i][2]);
    auto v = comb::check_vartheta(sys);
    return Row{std::move(sys), std::move(v)};
  });
  Outcome o;
  Table t{"interior",
          {"p", "r", "alpha", "eps", "residual_zero", "vanishes_below_alpha", "v_at_alpha", "bounded_to", "verdict"}};
  for (const auto& [sys, v] : rows) {
    const bool ok = sys.residual_zero && v.vanishes_below_alpha && v.exact_at_alpha && v.bounded_in_window;
    t.add_row({str(sys.p), str(sys.r), str(sys.alpha), str(sys.eps), str(sys.residual_zero),
               str(v.vanishes_below_alpha), str(v.at_alpha), str(v.window_end), ok ? "holds" : "fails"});
    if (!ok) o.fail("interior " + tuple_str(sys.p, sys.r, sys.alpha) + " " + v.failure);
  }
  o.tables.push_back(std::move(t));
  return o;
}

Outcome verify_rho_case(const Config& c) {
  const auto ps = primes_or(c, {5, 7, 11, 13});
  require_large_primes(ps);
  const long r_max = c.r_max > 0 ? c.r_max : 200;
  std::vector<std::pair<long, long>> grid;
  for (long p : ps) {
    for (long r = p - 2; r <= r_max; r += p + 1) grid.emplace_back(p, r);
  }
  struct Row {
    comb::AnnihilatorSystem sys;
    comb::RhoCaseReport rc;
  };
  const auto rows = parallel_map(grid.size(), c.jobs, [&](std::size_t i) {
    auto sys = comb::build_rho_annihilator(grid[i].first, grid[i].second);
    auto rc = comb::check_rho_case(sys);
    return Row{std::move(sys), std::move(rc)};
  });
  Outcome o;
  Table t{"rho-case",
          {"p", "r", "rho", "eps", "d0", "vartheta_rho", "residual_zero", "scaled_equality", "congruent", "verdict"}};
  for (const auto& [sys, rc] : rows) {
    const bool ok = sys.residual_zero && rc.scaled_equality && rc.congruent;
    t.add_row({str(sys.p), str(sys.r), str(sys.rho), str(sys.eps), str(rc.d0), str(rc.vartheta_rho),
               str(sys.residual_zero), str(rc.scaled_equality), str(rc.congruent), ok ? "holds" : "fails"});
    if (!ok) o.fail("rho-case p=" + str(sys.p) + " r=" + str(sys.r));
  }
  t.notes.push_back("vartheta_rho = (1-p)^rho D_0, so D_0 and vartheta_rho agree modulo p^{v_p(D_0)+1} but are not equal");
  o.tables.push_back(std::move(t));
  return o;
}

Outcome hecke_grid(const Config& c) {
  const auto ps = primes_or(c, {5, 7});
  require_large_primes(ps);
  std::vector<hecke::SurrogateParams> grid;
  for (long p : ps) {
    for (long t = 0; t <= c.t_max; ++t) {
      for (long d = 0; d <= c.delta_max; ++d) {
        for (long a = 0; a <= d && a + d <= t; ++a) {
          hecke::SurrogateParams sp;
          sp.p = p;
          sp.t = t;
          sp.delta = d;
          sp.alpha = a;
          grid.push_back(sp);
        }
      }
    }
  }
  const auto reps = parallel_map(grid.size(), c.jobs, [&](std::size_t i) {
    return hecke::verify_T_expansion(grid[i], grid[i].alpha);
  });
  Outcome o;
  Table t{"hecke-expansion", {"p", "t", "delta", "alpha", "M", "terms", "matches", "merged_exponent_form"}};
  long merged = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& sp = grid[i];
    const auto& rep = reps[i];
    if (rep.merged_exponent_form_matches) ++merged;
    t.add_row({str(sp.p), str(sp.t), str(sp.delta), str(sp.alpha), str(static_cast<long>(sp.precision())),
               str(static_cast<long>(rep.terms)), str(rep.matches), str(rep.merged_exponent_form_matches)});
    if (!rep.matches) {
      o.fail("hecke p=" + str(sp.p) + " t=" + str(sp.t) + " delta=" + str(sp.delta) + " alpha=" + str(sp.alpha) + ": " +
             rep.first_difference);
    }
  }
  t.notes.push_back("merged_exponent_form is informational: it matches on " + str(merged) + " of " +
                    str(static_cast<long>(grid.size())) + " cells");
  o.tables.push_back(std::move(t));
  return o;
}

Outcome verify_target(const std::string& target, const Config& c) {
  if (target == "binomial-carries") return verify_carries(c);
  if (target == "bounds") return verify_bounds(c, comb::all_bounds());
  if (auto b = comb::parse_bound(target)) return verify_bounds(c, {*b});
  if (target == "integrality") return verify_integrality(c);
  if (target == "constant-rows") return verify_constant_rows(c);
  if (target == "determinant") return verify_determinant(c);
  if (target == "matrix") return verify_matrix(c);
  if (target == "interior") return verify_interior(c);
  if (target == "rho-case") return verify_rho_case(c);
  if (target == "hecke") return hecke_grid(c);
  throw UsageError("unknown verify target '" + target + "'");
}

// ---- other commands -------------------------------------------------------

Outcome cmd_slopes(const Config& c) {
  const auto ps = primes_or(c, {});
  if (ps.empty()) throw UsageError("--p is required");
  const auto ks = even_weights(c);
  std::vector<std::pair<long, long>> cells;
  for (long p : ps) {
    for (long k : ks) cells.emplace_back(p, k);
  }
  const auto slopes = parallel_map(cells.size(), c.jobs, [&](std::size_t i) {
    return mf::slopes(cells[i].first, cells[i].second);
  });
  Outcome o;
  Table t{"slopes", {"p", "k", "slope"}};
  note_odd_weights(c, t);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& s : slopes[i]) {
      t.add_row({str(cells[i].first), str(cells[i].second), str(s)});
      if (s > 0) t.notes.push_back("positive slope " + str(s) + " at p=" + str(cells[i].first) + " k=" + str(cells[i].second));
    }
  }
  o.tables.push_back(std::move(t));
  return o;
}

std::string join_masses(const std::vector<Rational>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ' ';
    out += str(m);
  }
  return out;
}

Outcome cmd_measure(const Config& c) {
  const auto ps = primes_or(c, {});
  if (ps.empty()) throw UsageError("--p is required");
  const auto ks = even_weights(c);
  const long k_min = ks.front();
  const long k_max = ks.back();
  if (k_min < 4) throw UsageError("measures need k >= 4");
  Outcome o;
  Table t{"middle-mass",
          {"p", "k", "dim_old", "dim_new", "count_middle", "fraction_middle", "left_end", "right_end", "masses"}};
  t.json_only = {"masses"};
  note_odd_weights(c, t);
  const std::set<long> wanted(ks.begin(), ks.end());
  for (long p : ps) {
    const auto profile = measure::middle_mass_profile(p, k_min, k_max, c.include_newforms, c.jobs, c.max_dim);
    bool symmetric = true;
    for (const auto& row : profile.rows) {
      if (!wanted.contains(row.k)) continue;
      symmetric = symmetric && row.measure.is_symmetric();
      t.add_row({str(row.p), str(row.k), str(row.dim_old), str(row.dim_new), str(row.middle.count),
                 str(row.middle.fraction), str(row.bound.left_end), str(row.bound.right_end),
                 join_masses(row.measure.masses)});
    }
    if (c.include_newforms) {
      t.notes.push_back("p=" + str(p) + ": newform atoms sit at (k-2)/(2(k-1)), so full measures are not symmetric");
    } else {
      t.notes.push_back("p=" + str(p) + ": measures " + (symmetric ? "symmetric" : "NOT symmetric") +
                        " under eta <-> 1 - eta");
    }
    if (p >= 5) {
      const auto reg = measure::is_regular(p);
      std::string ev = "p=" + str(p) + ": " + (reg.regular ? "regular" : "irregular");
      if (reg.weights_checked.empty()) {
        ev += " (no level-one cusp forms in weights 12.." + str(reg.k_max) + ")";
      } else {
        for (const auto& [k, s] : reg.witnesses) ev += ", slope " + str(s) + " at k=" + str(k);
      }
      t.notes.push_back(ev);
    }
    if (!symmetric && !c.include_newforms) o.fail("asymmetric oldform measure at p=" + str(p));
    if (profile.cutoff) {
      t.notes.push_back("cutoff: " + *profile.cutoff);
      o.guard_tripped = true;
    }
  }
  o.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_lambda(const Config& c) {
  const auto ps = primes_or(c, {});
  if (ps.size() != 1) throw UsageError("lambda needs exactly one --p");
  if (!c.alpha) throw UsageError("lambda needs --alpha");
  const auto table = comb::lambda_coefficients(ps[0], c.R, *c.alpha);
  const auto other = comb::lambda_by_interpolation(ps[0], c.R, *c.alpha);
  const bool residual_zero = comb::lambda_residual(table) == QPoly();
  Outcome o;
  Table t{"lambda", {"p", "R", "alpha", "beta", "m", "lambda"}};
  for (std::size_t m = 0; m < table.by_offset.size(); ++m) {
    const long ml = static_cast<long>(m);
    t.add_row({str(table.p), str(table.R), str(table.alpha), str(table.alpha - ml), str(ml), str(table.by_offset[m])});
  }
  t.notes.push_back(std::string("defining identity residual ") + (residual_zero ? "zero" : "NONZERO"));
  t.notes.push_back(std::string("interpolation route ") +
                    (other.by_offset == table.by_offset ? "agrees" : "DISAGREES"));
  if (!residual_zero || other.by_offset != table.by_offset) o.fail("lambda table inconsistent");
  o.tables.push_back(std::move(t));
  return o;
}

// ---- output ---------------------------------------------------------------

void emit(const Outcome& o, const Config& c, const std::string& name, std::ostream& out, std::ostream& err) {
  const auto fmt = report::parse_format(c.format);
  std::filesystem::path path;
  if (!c.out_path.empty()) {
    path = c.out_path;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / (name + (fmt == report::Format::csv ? ".csv" : ".json"));
  }
  if (path.empty()) {
    report::write(out, o.tables, fmt);
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string());
  report::write(file, o.tables, fmt);
  err << "wrote " << path.string() << '\n';
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw std::invalid_argument("bad integer '" + s + "' in range '" + text + "'");
    return v;
  };
  std::set<long> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long a = to_long(text.substr(0, dots));
    const long b = to_long(text.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty range '" + text + "'");
    for (long v = a; v <= b; ++v) out.insert(v);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(to_long(item));
  }
  if (out.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return {out.begin(), out.end()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"exact checks for valuation bounds, Hecke expansions, slopes and slope measures", "slopekit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.primes, "primes, comma separated")->delimiter(',');
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, std::string("output file (default: $") + kOutputDirEnv + "/<name>, else stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string target;
  auto* verify = app.add_subcommand("verify", "run an exact verification sweep");
  verify->add_option("target", target,
                     "binomial-carries, bounds, general-below, general-above, general-constants, rho-below, "
                     "rho-above, rho-constants, integrality, constant-rows, determinant, matrix, interior, "
                     "rho-case, hecke")
      ->required();
  common(verify);
  verify->add_option("--r", cfg.r, "single r (with --alpha)");
  verify->add_option("--alpha", cfg.alpha, "single alpha (with --r)");
  verify->add_option("--r-max", cfg.r_max, "largest r in the sweep");
  verify->add_option("--a-max", cfg.a_max, "largest a for binomial-carries");
  verify->add_option("--R-max", cfg.big_r_max, "largest block size for determinant");
  verify->add_option("--t-max", cfg.t_max, "largest degree for hecke");
  verify->add_option("--delta-max", cfg.delta_max, "largest delta for hecke");
  verify->add_flag("--extended-alpha", cfg.extended_alpha, "sweep every alpha with rho' >= 1");

  auto* slopes = app.add_subcommand("slopes", "slopes of T_p on level-one cusp forms");
  common(slopes);
  slopes->add_option("--k", cfg.k_range, "weights: a..b, a,b,c or a")->required();

  auto* meas = app.add_subcommand("measure", "supersingularity measures and middle-interval mass");
  common(meas);
  meas->add_option("--k", cfg.k_range, "weights: a..b, a,b,c or a")->required();
  auto* old_flag = meas->add_flag("--oldforms", "oldforms only (default)");
  meas->add_flag("--include-newforms", cfg.include_newforms, "add the newform atoms")->excludes(old_flag);
  meas->add_option("--max-dim", cfg.max_dim, "resource guard on dim S_k");

  auto* lam = app.add_subcommand("lambda", "dump the Lambda coefficients");
  common(lam);
  lam->add_option("--R", cfg.R, "R")->required();
  lam->add_option("--alpha", cfg.alpha, "alpha")->required();

  auto* hk = app.add_subcommand("hecke-check", "expand T on a grid of surrogate parameters");
  common(hk);
  hk->add_option("--t-max", cfg.t_max, "largest degree");
  hk->add_option("--delta-max", cfg.delta_max, "largest delta");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_msg, e_msg;
    const int code = app.exit(e, o_msg, e_msg);
    out << o_msg.str();
    err << e_msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome o;
    std::string name;
    if (verify->parsed()) {
      o = verify_target(target, cfg);
      name = "verify-" + target;
    } else if (slopes->parsed()) {
      o = cmd_slopes(cfg);
      name = "slopes";
    } else if (meas->parsed()) {
      o = cmd_measure(cfg);
      name = "measure";
    } else if (lam->parsed()) {
      o = cmd_lambda(cfg);
      name = "lambda";
    } else {
      o = hecke_grid(cfg);
      name = "hecke-check";
    }
    emit(o, cfg, name, out, err);
    if (o.counterexample) {
      err << "counterexample: " << o.first_counterexample << '\n';
      return kExitCounterexample;
    }
    if (o.guard_tripped) {
      err << "resource guard tripped; output is partial\n";
      return kExitUsage;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitCounterexample;
  }
}

}  // namespace slopekit::cli
