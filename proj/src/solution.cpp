#include "netmaint/solution.hpp"

#include <string>

#include "netmaint/errors.hpp"

namespace netmaint {

std::string_view to_string(Objective objective) {
  return objective == Objective::MaxConnectivity ? "max" : "min";
}

Objective parse_objective(std::string_view text) {
  if (text == "max") return Objective::MaxConnectivity;
  if (text == "min") return Objective::MinDisconnectivity;
  throw ValidationError("unknown objective '" + std::string(text) + "'");
}

Rational objective_value(const Instance& instance, Objective objective,
                         const Rational& connected) {
  return objective == Objective::MaxConnectivity ? connected : Rational(instance.horizon - connected);
}

}  // namespace netmaint
