// Copyright 2026 The collective-arb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "collective_arb/lp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace collective_arb::lp {

Rational Constraint::evaluate(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (const auto& [var, coef] : terms) s += coef * x.at(var);
  return s;
}

std::size_t LinearProgram::add_variable(std::string name, Bound bound, Rational cost) {
  bounds_.push_back(std::move(bound));
  costs_.push_back(std::move(cost));
  if (name.empty()) name = "x" + std::to_string(bounds_.size() - 1);
  names_.push_back(std::move(name));
  return bounds_.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Term> terms, Relation relation, Rational rhs,
                                   std::string name) {
  for (const auto& t : terms) {
    if (t.first >= bounds_.size()) {
      throw std::out_of_range("constraint references unknown variable");
    }
  }
  if (name.empty()) name = "c" + std::to_string(constraints_.size());
  constraints_.push_back({std::move(terms), relation, std::move(rhs), std::move(name)});
}

Rational LinearProgram::objective(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (std::size_t j = 0; j < costs_.size(); ++j) {
    if (costs_[j] != 0) s += costs_[j] * x.at(j);
  }
  return s;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

thread_local std::ostream* listing_sink = nullptr;
thread_local AuditCounters counters;

// Original variable j expressed in standard-form columns:
// x_j = offset + sum coef * s_col.
struct VarMap {
  Rational offset = 0;
  std::vector<std::pair<std::size_t, int>> columns;
};

// Fraction-free (Bareiss) simplex tableau. After finalize() the entries are
// integers T with common denominator D, the determinant of the current basis
// in scaled units: the tableau entry is T(r, c) / D and every basic column
// reads D e_r. The reduced-cost row is carried the same way, as integers C
// over L D with L clearing the objective's denominators. Updates are exact
// integer divisions, done in place.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), stage_(rows), stage_rhs_(rows), basis_(rows) {}

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  // Sparse rational staging area, valid until finalize().
  Rational& at(std::size_t r, std::size_t c) { return stage_[r][c]; }
  Rational& rhs(std::size_t r) { return stage_rhs_[r]; }
  void negate_row(std::size_t r, std::size_t limit) {
    for (auto& [c, v] : stage_[r]) {
      if (c < limit) v = -v;
    }
  }

  // Scales every row to integers. Columns at or beyond unit_from hold the
  // +-1 coefficients of slacks and artificials; they are kept as they are,
  // which rescales those variables instead. scale(r) reports the factor a
  // multiplier of the scaled row must be multiplied by.
  void finalize(std::size_t unit_from) {
    t_.clear();
    t_.resize(m_ * n_);
    b_.clear();
    b_.resize(m_);
    scale_.assign(m_, Rational(1));
    for (std::size_t r = 0; r < m_; ++r) {
      Integer l = denominator(stage_rhs_[r]);
      for (const auto& [c, v] : stage_[r]) {
        if (c < unit_from && v != 0) l = lcm(l, Integer(denominator(v)));
      }
      for (const auto& [c, v] : stage_[r]) {
        if (v == 0) continue;
        t_[r * n_ + c] = c < unit_from ? Integer(numerator(v) * (l / denominator(v))) : numerator(v);
      }
      b_[r] = numerator(stage_rhs_[r]) * (l / denominator(stage_rhs_[r]));
      if (l != 1) scale_[r] = Rational(l);
    }
    stage_.clear();
    stage_rhs_.clear();
    d_scale_ = 1;
  }

  const Rational& scale(std::size_t r) const { return scale_[r]; }
  bool nonzero(std::size_t r, std::size_t c) const { return t_[r * n_ + c] != 0; }
  bool rhs_zero(std::size_t r) const { return b_[r] == 0; }
  Rational value(std::size_t r, std::size_t c) const { return Rational(t_[r * n_ + c], d_scale_); }
  Rational rhs_value(std::size_t r) const { return Rational(b_[r], d_scale_); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  Rational reduced_cost(std::size_t j) const {
    return Rational(c_[j], Integer(cost_scale_ * d_scale_));
  }

  // Reduced costs d = c - c_B B^{-1} A for the objective c.
  void price(const std::vector<Rational>& c) {
    cost_scale_ = 1;
    for (const auto& v : c) {
      if (v != 0) cost_scale_ = lcm(cost_scale_, Integer(denominator(v)));
    }
    std::vector<Integer> ci(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (c[j] != 0) ci[j] = numerator(c[j]) * (cost_scale_ / denominator(c[j]));
    }
    c_.clear();
    c_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (ci[j] != 0) mpz_mul(raw(c_[j]), raw(ci[j]), raw(d_scale_));
    }
    for (std::size_t r = 0; r < m_; ++r) {
      const Integer& cb = ci[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (nonzero(r, j)) mpz_submul(raw(c_[j]), raw(cb), raw(t_[r * n_ + j]));
      }
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const Integer piv = t_[p * n_ + q];
    const bool same = piv == d_scale_;
    nz_.clear();
    for (std::size_t j = 0; j < n_; ++j) {
      if (nonzero(p, j)) nz_.push_back(j);
    }
    const bool p_rhs = b_[p] != 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == p) continue;
      f_ = t_[r * n_ + q];
      if (same) {
        // T <- T - f T_p / D; rows with f = 0 are untouched.
        if (f_ == 0) continue;
        for (auto j : nz_) eliminate_unit(t_[r * n_ + j], t_[p * n_ + j]);
        if (p_rhs) eliminate_unit(b_[r], b_[p]);
        continue;
      }
      // T <- (T piv - f T_p) / D.
      for (std::size_t j = 0; j < n_; ++j) eliminate(t_[r * n_ + j], t_[p * n_ + j], piv);
      eliminate(b_[r], b_[p], piv);
    }
    if (!c_.empty()) {
      f_ = c_[q];
      if (same) {
        if (f_ != 0) {
          for (auto j : nz_) eliminate_unit(c_[j], t_[p * n_ + j]);
        }
      } else {
        for (std::size_t j = 0; j < n_; ++j) eliminate(c_[j], t_[p * n_ + j], piv);
      }
    }
    d_scale_ = piv;
    basis_[p] = q;
  }

  // Entering column among [0, limit): most negative reduced cost, or the
  // lowest index once bland is set. Returns false at optimality. On
  // unboundedness sets leave = rows().
  bool choose(std::size_t limit, bool bland, std::size_t& enter, std::size_t& leave) {
    // Entries with the sign of D are the positive ones.
    const int sd = d_scale_.sign();
    enter = n_;
    for (std::size_t j = 0; j < limit; ++j) {
      if (c_[j].sign() != -sd) continue;
      if (enter == n_ || c_[j].compare(c_[enter]) * sd < 0) {
        enter = j;
        if (bland) break;
      }
    }
    if (enter == n_) return false;
    // Ratios b / T are compared by cross-multiplication; the candidate
    // denominators share the sign of D.
    leave = m_;
    for (std::size_t r = 0; r < m_; ++r) {
      const Integer& a = t_[r * n_ + enter];
      if (a.sign() != sd) continue;
      if (leave == m_) {
        leave = r;
        continue;
      }
      const Integer& best = t_[leave * n_ + enter];
      mpz_mul(raw(lhs_), raw(b_[r]), raw(best));
      mpz_mul(raw(rhs_), raw(b_[leave]), raw(a));
      const int cmp = lhs_.compare(rhs_);
      if (cmp < 0 || (cmp == 0 && basis_[r] < basis_[leave])) leave = r;
    }
    return true;
  }

  // Switches to Bland's rule for good after a run of degenerate pivots, so
  // the steepest-cost rule cannot cycle.
  struct Rule {
    bool bland = false;
    std::size_t streak = 0;
    void record(bool degenerate) {
      streak = degenerate ? streak + 1 : 0;
      if (streak > 32) bland = true;
    }
  };

  std::vector<Rational> basic_solution() const {
    std::vector<Rational> s(n_);
    for (std::size_t r = 0; r < m_; ++r) s[basis_[r]] = rhs_value(r);
    return s;
  }

 private:
  using Integer = boost::multiprecision::mpz_int;

  static mpz_ptr raw(Integer& x) { return x.backend().data(); }
  static mpz_srcptr raw(const Integer& x) { return x.backend().data(); }

  // x <- x - f_ y / D, with D dividing f_ y.
  void eliminate_unit(Integer& x, const Integer& y) {
    if (y == 0) return;
    if (d_scale_ == 1) {
      mpz_submul(raw(x), raw(f_), raw(y));
      return;
    }
    mpz_mul(raw(tmp_), raw(f_), raw(y));
    mpz_divexact(raw(tmp_), raw(tmp_), raw(d_scale_));
    mpz_sub(raw(x), raw(x), raw(tmp_));
  }

  // x <- (x piv - f_ y) / D.
  void eliminate(Integer& x, const Integer& y, const Integer& piv) {
    const bool cross = f_ != 0 && y != 0;
    if (x == 0 && !cross) return;
    mpz_mul(raw(x), raw(x), raw(piv));
    if (cross) mpz_submul(raw(x), raw(f_), raw(y));
    mpz_divexact(raw(x), raw(x), raw(d_scale_));
  }

  std::size_t m_, n_;
  std::vector<std::map<std::size_t, Rational>> stage_;
  std::vector<Rational> stage_rhs_;
  std::vector<Integer> t_;
  std::vector<Integer> b_;
  std::vector<Rational> scale_;
  std::vector<Integer> c_;
  Integer cost_scale_ = 1;
  Integer d_scale_ = 1;
  Integer f_, tmp_, lhs_, rhs_;
  std::vector<std::size_t> nz_;
  std::vector<std::size_t> basis_;
};

std::vector<Rational> to_original(const std::vector<VarMap>& maps, const std::vector<Rational>& s,
                                  bool with_offset) {
  std::vector<Rational> x(maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (with_offset) x[j] = maps[j].offset;
    for (const auto& [col, coef] : maps[j].columns) {
      if (coef > 0) {
        x[j] += s[col];
      } else {
        x[j] -= s[col];
      }
    }
  }
  return x;
}

LPOutcome solve_impl(const LinearProgram& lp) {
  const std::size_t nv = lp.num_variables();
  const auto& bounds = lp.bounds();
  LPOutcome out;

  for (const auto& b : bounds) {
    if (b.lower && b.upper && *b.lower > *b.upper) {
      out.status = Status::kInfeasible;
      out.farkas.assign(lp.num_constraints(), Rational(0));
      return out;
    }
  }

  // Standard form columns: structural parts, then one slack per inequality
  // row, then one artificial per row.
  std::vector<VarMap> maps(nv);
  std::size_t ncols = 0;
  std::vector<std::size_t> bounded;  // variables needing an internal upper row
  for (std::size_t j = 0; j < nv; ++j) {
    const auto& b = bounds[j];
    if (b.lower) {
      maps[j].offset = *b.lower;
      maps[j].columns.push_back({ncols++, +1});
      if (b.upper) bounded.push_back(j);
    } else if (b.upper) {
      maps[j].offset = *b.upper;
      maps[j].columns.push_back({ncols++, -1});
    } else {
      maps[j].columns.push_back({ncols++, +1});
      maps[j].columns.push_back({ncols++, -1});
    }
  }
  const auto& cons = lp.constraints();
  const std::size_t m_orig = cons.size();
  const std::size_t m = m_orig + bounded.size();

  const std::size_t first_slack = ncols;
  std::vector<std::size_t> slack_of(m, static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < m; ++r) {
    if (r >= m_orig || cons[r].relation != Relation::kEqual) slack_of[r] = ncols++;
  }
  const std::size_t art0 = ncols;
  ncols += m;

  Tableau tab(m, ncols);
  std::vector<int> sigma(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    Rational b;
    if (r < m_orig) {
      b = cons[r].rhs;
      for (const auto& [var, coef] : cons[r].terms) {
        if (coef == 0) continue;
        b -= coef * maps[var].offset;
        for (const auto& [col, sgn] : maps[var].columns) {
          if (sgn > 0) {
            tab.at(r, col) += coef;
          } else {
            tab.at(r, col) -= coef;
          }
        }
      }
      if (cons[r].relation == Relation::kLessEqual) tab.at(r, slack_of[r]) = 1;
      if (cons[r].relation == Relation::kGreaterEqual) tab.at(r, slack_of[r]) = -1;
    } else {
      const std::size_t j = bounded[r - m_orig];
      tab.at(r, maps[j].columns.front().first) = 1;
      tab.at(r, slack_of[r]) = 1;
      b = *bounds[j].upper - *bounds[j].lower;
    }
    if (b < 0) {
      sigma[r] = -1;
      b = -b;
      tab.negate_row(r, art0);
    }
    tab.rhs(r) = b;
    tab.at(r, art0 + r) = 1;
    tab.basis(r) = art0 + r;
  }
  std::vector<bool> slack_start(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    slack_start[r] = slack_of[r] != static_cast<std::size_t>(-1) && tab.at(r, slack_of[r]) == 1;
  }
  tab.finalize(first_slack);

  // Phase 1. Rows whose slack has coefficient +1 start with the slack in
  // the basis; the others start on their artificial. Every artificial
  // column stays in the tableau, so its reduced cost still yields the row
  // multiplier at the end.
  std::vector<Rational> c1(ncols);
  for (std::size_t r = 0; r < m; ++r) {
    if (slack_start[r]) {
      tab.basis(r) = slack_of[r];
    } else {
      c1[art0 + r] = 1;
    }
  }
  tab.price(c1);
  std::size_t enter = 0, leave = 0;
  Tableau::Rule rule1;
  while (tab.choose(art0, rule1.bland, enter, leave)) {
    rule1.record(tab.rhs_zero(leave));
    tab.pivot(leave, enter);
    ++out.pivots;
  }
  Rational infeas = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) >= art0) infeas += tab.rhs_value(r);
  }
  if (infeas > 0) {
    out.status = Status::kInfeasible;
    out.farkas.resize(m_orig);
    for (std::size_t r = 0; r < m_orig; ++r) {
      Rational y = (c1[art0 + r] - tab.reduced_cost(art0 + r)) * tab.scale(r);
      out.farkas[r] = sigma[r] > 0 ? y : Rational(-y);
    }
    return out;
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) < art0) continue;
    for (std::size_t c = 0; c < art0; ++c) {
      if (tab.nonzero(r, c)) {
        tab.pivot(r, c);
        ++out.pivots;
        break;
      }
    }
  }

  // Phase 2 in minimization form.
  const bool maximize = lp.sense() == Sense::kMaximize;
  std::vector<Rational> c2(ncols);
  for (std::size_t j = 0; j < nv; ++j) {
    Rational cj = maximize ? Rational(-lp.costs()[j]) : lp.costs()[j];
    if (cj == 0) continue;
    for (const auto& [col, sgn] : maps[j].columns) c2[col] = sgn > 0 ? cj : Rational(-cj);
  }
  tab.price(c2);
  Tableau::Rule rule2;
  while (tab.choose(art0, rule2.bland, enter, leave)) {
    if (leave == m) {
      out.status = Status::kUnbounded;
      out.point = to_original(maps, tab.basic_solution(), true);
      std::vector<Rational> dir(ncols);
      dir[enter] = 1;
      for (std::size_t r = 0; r < m; ++r) dir[tab.basis(r)] = -tab.value(r, enter);
      out.ray = to_original(maps, dir, false);
      return out;
    }
    rule2.record(tab.rhs_zero(leave));
    tab.pivot(leave, enter);
    ++out.pivots;
  }
  out.status = Status::kOptimal;
  out.point = to_original(maps, tab.basic_solution(), true);
  out.value = lp.objective(out.point);
  out.dual.resize(m_orig);
  for (std::size_t r = 0; r < m_orig; ++r) {
    // Minimization multiplier is y'_r = c_art - d_art = -d_art.
    Rational y = -tab.reduced_cost(art0 + r) * tab.scale(r);
    if (sigma[r] < 0) y = -y;
    out.dual[r] = maximize ? Rational(-y) : y;
  }
  return out;
}

bool relation_holds(Relation rel, const Rational& lhs, const Rational& rhs) {
  switch (rel) {
    case Relation::kLessEqual:
      return lhs <= rhs;
    case Relation::kEqual:
      return lhs == rhs;
    case Relation::kGreaterEqual:
      return lhs >= rhs;
  }
  return false;
}

const char* relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

std::optional<std::string> check_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables()) return "point has wrong length";
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& b = lp.bounds()[j];
    if ((b.lower && x[j] < *b.lower) || (b.upper && x[j] > *b.upper)) {
      return "variable " + lp.names()[j] + " violates its bounds";
    }
  }
  for (const auto& c : lp.constraints()) {
    if (!relation_holds(c.relation, c.evaluate(x), c.rhs)) {
      return "constraint " + c.name + " violated";
    }
  }
  return std::nullopt;
}

// Sign pattern of a minimization multiplier: >= rows nonnegative, <= rows
// nonpositive. flip reverses it.
std::optional<std::string> check_signs(const LinearProgram& lp, const std::vector<Rational>& y,
                                       bool flip) {
  if (y.size() != lp.num_constraints()) return "multiplier has wrong length";
  for (std::size_t r = 0; r < y.size(); ++r) {
    const int s = flip ? -y[r].sign() : y[r].sign();
    const auto rel = lp.constraints()[r].relation;
    if ((rel == Relation::kGreaterEqual && s < 0) || (rel == Relation::kLessEqual && s > 0)) {
      return "multiplier on " + lp.constraints()[r].name + " has the wrong sign";
    }
  }
  return std::nullopt;
}

std::vector<Rational> transpose_times(const LinearProgram& lp, const std::vector<Rational>& y) {
  std::vector<Rational> a(lp.num_variables());
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r] == 0) continue;
    for (const auto& [var, coef] : lp.constraints()[r].terms) a[var] += coef * y[r];
  }
  return a;
}

Rational rhs_dot(const LinearProgram& lp, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t r = 0; r < y.size(); ++r) s += lp.constraints()[r].rhs * y[r];
  return s;
}

std::optional<std::string> check_optimal(const LinearProgram& lp, const LPOutcome& o) {
  if (auto v = check_feasible(lp, o.point)) return v;
  if (lp.objective(o.point) != o.value) return "value differs from objective at point";
  const bool maximize = lp.sense() == Sense::kMaximize;
  if (auto v = check_signs(lp, o.dual, maximize)) return v;
  // Work in minimization form: c' = +-c, y' = +-y, value' = +-value.
  std::vector<Rational> y = o.dual;
  if (maximize) {
    for (auto& v : y) v = -v;
  }
  const auto aty = transpose_times(lp, y);
  Rational bound = rhs_dot(lp, y);
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const Rational c = maximize ? Rational(-lp.costs()[j]) : lp.costs()[j];
    const Rational d = c - aty[j];
    const auto& b = lp.bounds()[j];
    if (d > 0) {
      if (!b.lower) return "reduced cost of " + lp.names()[j] + " needs a lower bound";
      bound += d * *b.lower;
    } else if (d < 0) {
      if (!b.upper) return "reduced cost of " + lp.names()[j] + " needs an upper bound";
      bound += d * *b.upper;
    }
  }
  const Rational value = maximize ? Rational(-o.value) : o.value;
  if (bound != value) return "dual bound " + collective_arb::to_string(bound) + " differs from value";
  return std::nullopt;
}

std::optional<std::string> check_infeasible(const LinearProgram& lp, const LPOutcome& o) {
  for (const auto& b : lp.bounds()) {
    if (b.lower && b.upper && *b.lower > *b.upper) return std::nullopt;
  }
  if (auto v = check_signs(lp, o.farkas, false)) return v;
  const auto a = transpose_times(lp, o.farkas);
  Rational box_max = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& b = lp.bounds()[j];
    if (a[j] > 0) {
      if (!b.upper) return "farkas combination unbounded above in " + lp.names()[j];
      box_max += a[j] * *b.upper;
    } else if (a[j] < 0) {
      if (!b.lower) return "farkas combination unbounded above in " + lp.names()[j];
      box_max += a[j] * *b.lower;
    }
  }
  if (!(rhs_dot(lp, o.farkas) > box_max)) return "farkas combination is not contradictory";
  return std::nullopt;
}

std::optional<std::string> check_unbounded(const LinearProgram& lp, const LPOutcome& o) {
  if (auto v = check_feasible(lp, o.point)) return v;
  if (o.ray.size() != lp.num_variables()) return "ray has wrong length";
  for (std::size_t j = 0; j < o.ray.size(); ++j) {
    const auto& b = lp.bounds()[j];
    if ((o.ray[j] > 0 && b.upper) || (o.ray[j] < 0 && b.lower)) {
      return "ray leaves the bounds of " + lp.names()[j];
    }
  }
  for (const auto& c : lp.constraints()) {
    if (!relation_holds(c.relation, c.evaluate(o.ray), Rational(0))) {
      return "ray is not a recession direction of " + c.name;
    }
  }
  const Rational slope = lp.objective(o.ray);
  const bool improves = lp.sense() == Sense::kMaximize ? slope > 0 : slope < 0;
  if (!improves) return "ray does not improve the objective";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_outcome(const LinearProgram& program, const LPOutcome& outcome) {
  switch (outcome.status) {
    case Status::kOptimal:
      return check_optimal(program, outcome);
    case Status::kInfeasible:
      return check_infeasible(program, outcome);
    case Status::kUnbounded:
      return check_unbounded(program, outcome);
  }
  return "unknown status";
}

LPOutcome solve(const LinearProgram& program) {
  LPOutcome out = solve_impl(program);
  ++counters.solves;
  if (auto failure = check_outcome(program, out)) {
    throw CertificateError("lp certificate rejected: " + *failure);
  }
  ++counters.verified;
  if (listing_sink != nullptr) {
    write_listing(*listing_sink, program);
    *listing_sink << "\\ status: " << to_string(out.status);
    if (out.optimal()) *listing_sink << ", value " << out.value;
    *listing_sink << ", pivots " << out.pivots << "\n\n";
  }
  return out;
}

void write_listing(std::ostream& os, const LinearProgram& lp, const std::string& title) {
  auto term_list = [&](const std::vector<Term>& terms) {
    std::ostringstream line;
    bool first = true;
    for (const auto& [var, coef] : terms) {
      if (coef == 0) continue;
      if (coef < 0) {
        line << (first ? "-" : " - ");
      } else if (!first) {
        line << " + ";
      }
      const Rational mag = coef < 0 ? Rational(-coef) : coef;
      if (mag != 1) line << mag << " ";
      line << lp.names()[var];
      first = false;
    }
    if (first) line << "0";
    return line.str();
  };
  if (!title.empty()) os << "\\ " << title << "\n";
  os << (lp.sense() == Sense::kMaximize ? "maximize" : "minimize") << "\n";
  std::vector<Term> obj;
  for (std::size_t j = 0; j < lp.num_variables(); ++j) obj.push_back({j, lp.costs()[j]});
  os << "  obj: " << term_list(obj) << "\n";
  os << "subject to\n";
  for (const auto& c : lp.constraints()) {
    os << "  " << c.name << ": " << term_list(c.terms) << " " << relation_symbol(c.relation)
       << " " << c.rhs << "\n";
  }
  os << "bounds\n";
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    const auto& b = lp.bounds()[j];
    os << "  ";
    if (!b.lower && !b.upper) {
      os << lp.names()[j] << " free";
    } else {
      os << (b.lower ? b.lower->str() : std::string("-inf")) << " <= " << lp.names()[j]
         << " <= " << (b.upper ? b.upper->str() : std::string("+inf"));
    }
    os << "\n";
  }
  os << "end\n";
}

ScopedListing::ScopedListing(std::ostream& os) : previous_(listing_sink) { listing_sink = &os; }

ScopedListing::~ScopedListing() { listing_sink = previous_; }

AuditCounters audit_counters() { return counters; }

void reset_audit_counters() { counters = {}; }

}  // namespace collective_arb::lp
