#include "netmaint/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "netmaint/errors.hpp"

namespace netmaint {

void validate_formula(const CnfFormula& formula) {
  if (formula.variables < 0) throw ValidationError("negative variable count");
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const Clause& clause = formula.clauses[c];
    for (int k = 0; k < 3; ++k) {
      const int var = std::abs(clause[k]);
      if (var == 0 || var > formula.variables) {
        throw ValidationError("clause " + std::to_string(c + 1) + " uses undeclared variable");
      }
      for (int l = 0; l < k; ++l) {
        if (std::abs(clause[l]) == var) {
          throw ValidationError("clause " + std::to_string(c + 1) + " repeats variable " +
                                std::to_string(var));
        }
      }
    }
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula formula;
  bool header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string kind;
      if (header || !(tokens >> kind >> formula.variables >> declared_clauses) || kind != "cnf") {
        throw ValidationError("malformed DIMACS header");
      }
      header = true;
      continue;
    }
    if (!header) throw ValidationError("clause before DIMACS header");
    std::istringstream literals(line);
    long long lit = 0;
    while (literals >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) {
          throw ValidationError("clause " + std::to_string(formula.clauses.size() + 1) +
                                " does not have exactly three literals");
        }
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!literals.eof()) throw ValidationError("non-numeric token in DIMACS clause");
  }
  if (!header) throw ValidationError("missing DIMACS header");
  if (!pending.empty()) throw ValidationError("last clause is not terminated by 0");
  if (static_cast<int>(formula.clauses.size()) != declared_clauses) {
    throw ValidationError("DIMACS header announces " + std::to_string(declared_clauses) +
                          " clauses, found " + std::to_string(formula.clauses.size()));
  }
  validate_formula(formula);
  return formula;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << " " << formula.clauses.size() << "\n";
  for (const Clause& c : formula.clauses) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
  return out.str();
}

bool brute_satisfiable(const CnfFormula& formula) {
  validate_formula(formula);
  if (formula.variables > 24) throw std::invalid_argument("formula too large for brute force");
  for (unsigned long mask = 0; mask < (1UL << formula.variables); ++mask) {
    bool all = true;
    for (const Clause& c : formula.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1UL;
        if ((lit > 0) == value) sat = true;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace netmaint
