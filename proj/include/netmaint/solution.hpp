#ifndef NETMAINT_SOLUTION_HPP_
#define NETMAINT_SOLUTION_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"

namespace netmaint {

enum class Objective {
  MaxConnectivity,     // maximise total s⁺–s⁻ connected time
  MinDisconnectivity,  // minimise total disconnected time
};

std::string_view to_string(Objective objective);
// Accepts "max" and "min".
Objective parse_objective(std::string_view text);

struct Solution {
  Schedule schedule;
  Rational value;  // connected time for Max, disconnected time for Min
};

// Converts a connected time into the objective's value.
Rational objective_value(const Instance& instance, Objective objective,
                         const Rational& connected);

// Serial runs are the reference; Parallel spreads independent work over
// OpenMP threads and must produce the same result.
enum class Execution { Serial, Parallel };

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

// Outcome of a budgeted exhaustive search. When the budget runs out the
// solution is absent; a partial incumbent is never reported as optimal.
struct SearchResult {
  std::optional<Solution> solution;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
};

}  // namespace netmaint

#endif  // NETMAINT_SOLUTION_HPP_
