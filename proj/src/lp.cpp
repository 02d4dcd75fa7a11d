#include "netmaint/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace netmaint {

std::size_t LinearProgram::add_variable(std::string name, std::optional<Rational> lower,
                                        std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return variables_.size() - 1;
}

void LinearProgram::set_objective(std::size_t variable, Rational coefficient) {
  if (coefficient == 0) {
    objective_.erase(variable);
  } else {
    objective_[variable] = std::move(coefficient);
  }
}

void LinearProgram::add_constraint(std::string name, std::vector<LpTerm> terms,
                                   Relation relation, Rational rhs) {
  constraints_.push_back({std::move(name), std::move(terms), relation, std::move(rhs)});
}

void LinearProgram::check_well_formed() const {
  for (const LpVariable& v : variables_) {
    if (v.lower && v.upper && *v.lower > *v.upper) {
      throw std::invalid_argument("variable '" + v.name + "' has lower bound above upper bound");
    }
  }
  for (const auto& [var, coef] : objective_) {
    if (var >= variables_.size()) throw std::invalid_argument("objective uses undeclared variable");
  }
  for (const LpConstraint& c : constraints_) {
    for (const LpTerm& t : c.terms) {
      if (t.variable >= variables_.size()) {
        throw std::invalid_argument("constraint '" + c.name + "' uses undeclared variable");
      }
    }
  }
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& assignment) {
  Rational value = 0;
  for (const auto& [var, coef] : lp.objective()) value += coef * assignment[var];
  return value;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& assignment) {
  if (assignment.size() != lp.variables().size()) return false;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    const LpVariable& v = lp.variables()[j];
    if (v.lower && assignment[j] < *v.lower) return false;
    if (v.upper && assignment[j] > *v.upper) return false;
  }
  for (const LpConstraint& c : lp.constraints()) {
    Rational lhs = 0;
    for (const LpTerm& t : c.terms) lhs += t.coefficient * assignment[t.variable];
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

enum class ColumnState { AtLower, AtUpper, Basic };

// Internal column j contributes sign * value(j) to original variable `var`.
struct ColumnOrigin {
  std::size_t var;
  int sign;
};

// Bounded-variable tableau: every column ranges over [0, upper] (upper may be
// infinite), every row reads B^-1 A.
class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> basic_value;
  std::vector<std::size_t> basis;
  std::vector<ColumnState> state;
  std::vector<std::optional<Rational>> upper;
  std::vector<bool> frozen;
  std::vector<Rational> cost;
  std::vector<Rational> reduced;
  std::size_t pivots = 0;

  std::size_t columns() const { return state.size(); }

  Rational column_value(std::size_t j) const {
    if (state[j] == ColumnState::AtLower) return 0;
    if (state[j] == ColumnState::AtUpper) return *upper[j];
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (basis[r] == j) return basic_value[r];
    }
    return 0;
  }

  void compute_reduced() {
    reduced = cost;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& cb = cost[basis[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns(); ++j) {
        if (rows[r][j] != 0) reduced[j] -= cb * rows[r][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    ++pivots;
    std::vector<Rational>& prow = rows[r];
    const Rational piv = prow[q];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < columns(); ++j) {
      if (prow[j] != 0) {
        prow[j] /= piv;
        nonzero.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][q] == 0) continue;
      const Rational factor = rows[i][q];
      for (std::size_t j : nonzero) rows[i][j] -= factor * prow[j];
    }
    if (reduced[q] != 0) {
      const Rational factor = reduced[q];
      for (std::size_t j : nonzero) reduced[j] -= factor * prow[j];
    }
    basis[r] = q;
  }

  enum class Step { Optimal, Unbounded, Moved };

  // One minimisation step under the smallest-index rule.
  Step iterate() {
    std::size_t q = columns();
    for (std::size_t j = 0; j < columns(); ++j) {
      if (state[j] == ColumnState::Basic || frozen[j]) continue;
      if ((state[j] == ColumnState::AtLower && reduced[j] < 0) ||
          (state[j] == ColumnState::AtUpper && reduced[j] > 0)) {
        q = j;
        break;
      }
    }
    if (q == columns()) return Step::Optimal;

    const int dir = state[q] == ColumnState::AtLower ? 1 : -1;
    std::optional<Rational> step;
    std::size_t leave = rows.size();  // rows.size() means bound flip
    bool leave_at_upper = false;
    if (upper[q]) step = *upper[q];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& alpha = rows[r][q];
      if (alpha == 0) continue;
      const Rational rate = dir > 0 ? alpha : Rational(-alpha);
      Rational limit;
      bool to_upper = false;
      if (rate > 0) {
        limit = basic_value[r] / rate;
      } else {
        const auto& ub = upper[basis[r]];
        if (!ub) continue;
        limit = (*ub - basic_value[r]) / -rate;
        to_upper = true;
      }
      const bool better =
          !step || limit < *step ||
          (limit == *step && leave != rows.size() && basis[r] < basis[leave]);
      if (better) {
        step = limit;
        leave = r;
        leave_at_upper = to_upper;
      }
    }
    if (!step) return Step::Unbounded;

    const Rational theta = *step;
    if (theta != 0) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][q] != 0) basic_value[r] -= (dir > 0 ? theta : Rational(-theta)) * rows[r][q];
      }
    }
    if (leave == rows.size()) {
      state[q] = dir > 0 ? ColumnState::AtUpper : ColumnState::AtLower;
      return Step::Moved;
    }
    const Rational entering_value = dir > 0 ? theta : Rational(*upper[q] - theta);
    state[basis[leave]] = leave_at_upper ? ColumnState::AtUpper : ColumnState::AtLower;
    pivot(leave, q);
    basic_value[leave] = entering_value;
    state[q] = ColumnState::Basic;
    return Step::Moved;
  }

  Step run() {
    for (;;) {
      const Step s = iterate();
      if (s != Step::Moved) return s;
    }
  }
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.check_well_formed();
  const auto& vars = lp.variables();

  // Shift every variable onto [0, u'] columns.
  std::vector<ColumnOrigin> origin;
  std::vector<std::optional<Rational>> col_upper;
  std::vector<Rational> offset(vars.size(), Rational(0));
  std::vector<std::vector<std::size_t>> columns_of(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const LpVariable& var = vars[v];
    if (var.lower) {
      offset[v] = *var.lower;
      columns_of[v].push_back(origin.size());
      origin.push_back({v, 1});
      col_upper.push_back(var.upper ? std::optional<Rational>(*var.upper - *var.lower)
                                    : std::nullopt);
    } else if (var.upper) {
      offset[v] = *var.upper;
      columns_of[v].push_back(origin.size());
      origin.push_back({v, -1});
      col_upper.push_back(std::nullopt);
    } else {
      columns_of[v].push_back(origin.size());
      origin.push_back({v, 1});
      col_upper.push_back(std::nullopt);
      columns_of[v].push_back(origin.size());
      origin.push_back({v, -1});
      col_upper.push_back(std::nullopt);
    }
  }
  const std::size_t structural = origin.size();

  struct Row {
    std::vector<Rational> coef;  // over structural columns
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const LpConstraint& c : lp.constraints()) {
    Row row{std::vector<Rational>(structural, Rational(0)), c.relation, c.rhs};
    for (const LpTerm& t : c.terms) {
      row.rhs -= t.coefficient * offset[t.variable];
      for (std::size_t col : columns_of[t.variable]) {
        row.coef[col] += t.coefficient * origin[col].sign;
      }
    }
    if (row.rhs < 0) {
      for (Rational& a : row.coef) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
    if (row.relation != Relation::Equal) ++slack_count;
    if (row.relation != Relation::LessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  const std::size_t m = rows.size();
  const std::size_t total = structural + slack_count + artificial_count;
  Tableau t;
  t.rows.assign(m, std::vector<Rational>(total, Rational(0)));
  t.basic_value.resize(m);
  t.basis.resize(m);
  t.state.assign(total, ColumnState::AtLower);
  t.upper = col_upper;
  t.upper.resize(total, std::nullopt);
  t.frozen.assign(total, false);

  std::size_t next_slack = structural;
  std::size_t next_artificial = structural + slack_count;
  const std::size_t first_artificial = next_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < structural; ++j) t.rows[r][j] = rows[r].coef[j];
    t.basic_value[r] = rows[r].rhs;
    if (rows[r].relation == Relation::LessEqual) {
      t.rows[r][next_slack] = 1;
      t.basis[r] = next_slack++;
    } else {
      if (rows[r].relation == Relation::GreaterEqual) t.rows[r][next_slack++] = -1;
      t.rows[r][next_artificial] = 1;
      t.basis[r] = next_artificial++;
    }
    t.state[t.basis[r]] = ColumnState::Basic;
  }

  LpOutcome outcome;
  if (artificial_count > 0) {
    t.cost.assign(total, Rational(0));
    for (std::size_t j = first_artificial; j < total; ++j) t.cost[j] = 1;
    t.compute_reduced();
    t.run();  // phase one is bounded below by zero
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] >= first_artificial) infeasibility += t.basic_value[r];
    }
    if (infeasibility > 0) {
      outcome.status = LpStatus::Infeasible;
      outcome.pivots = t.pivots;
      return outcome;
    }
    for (std::size_t j = first_artificial; j < total; ++j) {
      t.frozen[j] = true;
      t.upper[j] = Rational(0);
    }
    // Drive zero-valued artificials out of the basis where possible; rows
    // that cannot be cleared are redundant and keep a frozen artificial.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis[r] < first_artificial) continue;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.state[j] == ColumnState::Basic || t.rows[r][j] == 0) continue;
        const Rational value = t.column_value(j);
        t.state[t.basis[r]] = ColumnState::AtLower;
        t.pivot(r, j);
        t.basic_value[r] = value;
        t.state[j] = ColumnState::Basic;
        break;
      }
    }
  }

  t.cost.assign(total, Rational(0));
  for (const auto& [var, coef] : lp.objective()) {
    const Rational c = lp.sense() == Sense::Maximize ? Rational(-coef) : coef;
    for (std::size_t col : columns_of[var]) t.cost[col] += c * origin[col].sign;
  }
  t.compute_reduced();
  const Tableau::Step result = t.run();
  outcome.pivots = t.pivots;
  if (result == Tableau::Step::Unbounded) {
    outcome.status = LpStatus::Unbounded;
    return outcome;
  }

  std::vector<Rational> column(total, Rational(0));
  for (std::size_t j = 0; j < total; ++j) {
    if (t.state[j] == ColumnState::AtUpper) column[j] = *t.upper[j];
  }
  for (std::size_t r = 0; r < m; ++r) column[t.basis[r]] = t.basic_value[r];
  outcome.assignment = offset;
  for (std::size_t j = 0; j < structural; ++j) {
    outcome.assignment[origin[j].var] += origin[j].sign * column[j];
  }
  outcome.status = LpStatus::Optimal;
  outcome.value = evaluate_objective(lp, outcome.assignment);
  if (!satisfies(lp, outcome.assignment)) {
    throw std::logic_error("simplex returned an assignment that violates the LP");
  }
  return outcome;
}

std::string to_lp_text(const LinearProgram& lp) {
  const auto& vars = lp.variables();
  std::ostringstream out;
  auto term = [&](bool first, const Rational& coef, std::size_t var) {
    if (coef < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    const Rational mag = coef < 0 ? Rational(-coef) : coef;
    if (mag != 1) out << to_string(mag) << " ";
    out << vars[var].name;
  };

  out << (lp.sense() == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj: ";
  bool first = true;
  for (const auto& [var, coef] : lp.objective()) {
    term(first, coef, var);
    first = false;
  }
  if (first) out << "0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraints().size(); ++i) {
    const LpConstraint& c = lp.constraints()[i];
    out << " " << (c.name.empty() ? "c" + std::to_string(i) : c.name) << ": ";
    first = true;
    for (const LpTerm& t : c.terms) {
      term(first, t.coefficient, t.variable);
      first = false;
    }
    if (first) out << "0";
    switch (c.relation) {
      case Relation::LessEqual:
        out << " <= ";
        break;
      case Relation::Equal:
        out << " = ";
        break;
      case Relation::GreaterEqual:
        out << " >= ";
        break;
    }
    out << to_string(c.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const LpVariable& v : vars) {
    if (!v.lower && !v.upper) {
      out << " " << v.name << " free\n";
    } else if (v.lower && v.upper) {
      out << " " << to_string(*v.lower) << " <= " << v.name << " <= " << to_string(*v.upper)
          << "\n";
    } else if (v.lower) {
      out << " " << v.name << " >= " << to_string(*v.lower) << "\n";
    } else {
      out << " -inf <= " << v.name << " <= " << to_string(*v.upper) << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace netmaint
