#ifndef NETMAINT_LP_HPP_
#define NETMAINT_LP_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netmaint/rational.hpp"

namespace netmaint {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct LpVariable {
  std::string name;
  std::optional<Rational> lower;  // nullopt = -inf
  std::optional<Rational> upper;  // nullopt = +inf
};

struct LpTerm {
  std::size_t variable;
  Rational coefficient;
};

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

class LinearProgram {
 public:
  std::size_t add_variable(std::string name, std::optional<Rational> lower,
                           std::optional<Rational> upper);
  void set_sense(Sense sense) { sense_ = sense; }
  void set_objective(std::size_t variable, Rational coefficient);
  void add_constraint(std::string name, std::vector<LpTerm> terms, Relation relation,
                      Rational rhs);

  Sense sense() const { return sense_; }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::map<std::size_t, Rational>& objective() const { return objective_; }

  // Throws std::invalid_argument for unknown variables or crossed bounds.
  void check_well_formed() const;

 private:
  Sense sense_ = Sense::Maximize;
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::map<std::size_t, Rational> objective_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                   // meaningful when Optimal
  std::vector<Rational> assignment;  // indexed like LinearProgram::variables()
  std::size_t pivots = 0;
};

// Two-phase bounded-variable primal simplex over exact rationals with the
// smallest-index rule for entering and leaving variables. An Optimal result is
// re-checked against every bound and constraint before it is returned.
LpOutcome solve_lp(const LinearProgram& lp);

// Objective evaluated at `assignment`.
Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& assignment);

// True when `assignment` satisfies every bound and constraint exactly.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& assignment);

// Human-readable dump in CPLEX-LP style with rational coefficients.
std::string to_lp_text(const LinearProgram& lp);

std::string to_string(LpStatus status);

}  // namespace netmaint

#endif  // NETMAINT_LP_HPP_
