#ifndef NETMAINT_CNF_HPP_
#define NETMAINT_CNF_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace netmaint {

// Literals use DIMACS convention: +v is x_v, -v is ¬x_v, variables 1-based.
using Clause = std::array<int, 3>;

struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;
};

// Throws ValidationError unless every clause has three literals over three
// distinct declared variables.
void validate_formula(const CnfFormula& formula);

// Reads "p cnf n m" followed by zero-terminated clauses; 'c' lines are
// comments. Clauses must have exactly three literals.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& formula);

// Exhaustive satisfiability check for small formulas (n ≤ 24).
bool brute_satisfiable(const CnfFormula& formula);

}  // namespace netmaint

#endif  // NETMAINT_CNF_HPP_
