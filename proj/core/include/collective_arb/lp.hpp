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

#ifndef COLLECTIVE_ARB_LP_HPP_
#define COLLECTIVE_ARB_LP_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "collective_arb/rational.hpp"

// Exact rational linear programming: a fraction-free two-phase simplex with
// steepest reduced-cost pricing that falls back to Bland's rule after a run
// of degenerate pivots.
// Every outcome carries a certificate that check_outcome() re-verifies with
// plain arithmetic.
namespace collective_arb::lp {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Bound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  static Bound free() { return {}; }
  static Bound nonnegative() { return {Rational(0), std::nullopt}; }
  static Bound between(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
};

using Term = std::pair<std::size_t, Rational>;

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::kEqual;
  Rational rhs = 0;
  std::string name;

  Rational evaluate(const std::vector<Rational>& x) const;
};

class LinearProgram {
 public:
  explicit LinearProgram(Sense sense = Sense::kMinimize) : sense_(sense) {}

  std::size_t add_variable(std::string name, Bound bound, Rational cost = 0);
  void set_cost(std::size_t var, Rational cost) { costs_.at(var) = std::move(cost); }
  void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs,
                      std::string name = {});

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return bounds_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<Bound>& bounds() const { return bounds_; }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  Rational objective(const std::vector<Rational>& x) const;

 private:
  Sense sense_;
  std::vector<Bound> bounds_;
  std::vector<Rational> costs_;
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string to_string(Status status);

// Certificates, by status:
//  kOptimal    point is feasible; dual y has the sign pattern of the sense
//              (minimize: y >= 0 on >= rows, y <= 0 on <= rows) and the dual
//              bound built from y and the variable bounds equals value.
//  kInfeasible farkas y over the constraints with y >= 0 on >= rows, y <= 0 on
//              <= rows, such that sum_r y_r (a_r x) >= b.y holds for every
//              feasible x while the maximum of (A^T y).x over the variable
//              box is strictly below b.y.
//  kUnbounded  point is feasible and ray is a recession direction that
//              strictly improves the objective.
struct LPOutcome {
  Status status = Status::kInfeasible;
  Rational value = 0;
  std::vector<Rational> point;
  std::vector<Rational> dual;
  std::vector<Rational> farkas;
  std::vector<Rational> ray;
  std::size_t pivots = 0;

  bool optimal() const { return status == Status::kOptimal; }
  bool infeasible() const { return status == Status::kInfeasible; }
  bool unbounded() const { return status == Status::kUnbounded; }
};

// Raised when a solve produces a certificate that fails re-verification.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Solves exactly and re-verifies the certificate before returning. Throws
// CertificateError if verification fails.
LPOutcome solve(const LinearProgram& program);

// Independent verification of an outcome. Returns an explanation on failure.
std::optional<std::string> check_outcome(const LinearProgram& program,
                                         const LPOutcome& outcome);

// Plain-text listing of a program, one constraint per line.
void write_listing(std::ostream& os, const LinearProgram& program,
                   const std::string& title = {});

// While alive, every solve() on this thread writes a listing and its status
// to the given stream.
class ScopedListing {
 public:
  explicit ScopedListing(std::ostream& os);
  ~ScopedListing();
  ScopedListing(const ScopedListing&) = delete;
  ScopedListing& operator=(const ScopedListing&) = delete;

 private:
  std::ostream* previous_;
};

// Per-thread counters of solves and verified certificates.
struct AuditCounters {
  std::size_t solves = 0;
  std::size_t verified = 0;
};
AuditCounters audit_counters();
void reset_audit_counters();

}  // namespace collective_arb::lp

#endif  // COLLECTIVE_ARB_LP_HPP_
