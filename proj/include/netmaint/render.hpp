#ifndef NETMAINT_RENDER_HPP_
#define NETMAINT_RENDER_HPP_

#include <string>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"

namespace netmaint {

// Fixed-width chart: one row per edge ('#' = maintained somewhere in the
// cell), then a connectivity row ('=' connected, ' ' disconnected, '~' mixed).
// Exact atom boundaries follow below the chart.
std::string render_gantt_text(const Instance& instance, const Schedule& schedule,
                              const ConnectivityProfile& profile, int columns = 48);

std::string render_svg(const Instance& instance, const Schedule& schedule,
                       const ConnectivityProfile& profile);

}  // namespace netmaint

#endif  // NETMAINT_RENDER_HPP_
