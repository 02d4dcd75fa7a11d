#ifndef NETMAINT_SRC_SLOT_SEARCH_HPP_
#define NETMAINT_SRC_SLOT_SEARCH_HPP_

#include <cstddef>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/oracles.hpp"
#include "netmaint/solution.hpp"

namespace netmaint::detail {

enum class Regime { Contiguous, UnitSlots };

// Stable order of edge indices by window width, narrowest first.
std::vector<std::size_t> order_by_width(const Instance& instance);

// Maximises connected slots (inside options.window if set) over one grid
// placement per edge, taking edges in `order`. The returned value is
// re-checked with the sweep evaluator.
SearchResult slot_search(const Instance& instance, Objective objective,
                         const OracleOptions& options, Regime regime, bool path_mode,
                         const std::vector<std::size_t>& order);

}  // namespace netmaint::detail

#endif  // NETMAINT_SRC_SLOT_SEARCH_HPP_
