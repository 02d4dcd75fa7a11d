#ifndef NETMAINT_ERRORS_HPP_
#define NETMAINT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netmaint {

// Input data violates a type invariant (malformed instance, bad file).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A solver was handed an instance outside its domain, e.g. a non-preemptable
// job given to the preemptive LP method or a non-path graph to a path solver.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact search ran out of its node budget before proving optimality.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netmaint

#endif  // NETMAINT_ERRORS_HPP_
