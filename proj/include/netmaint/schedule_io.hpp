#ifndef NETMAINT_SCHEDULE_IO_HPP_
#define NETMAINT_SCHEDULE_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "netmaint/schedule.hpp"

namespace netmaint {

// {"edges":{"e1":[["0","1/2"],["1","3/2"]],...}} with keys in id order.
std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(std::string_view text);

Schedule load_schedule(const std::string& path);
void save_schedule(const std::string& path, const Schedule& schedule);

nlohmann::ordered_json profile_json(const ConnectivityProfile& profile);
nlohmann::ordered_json feasibility_json(const FeasibilityReport& report);

}  // namespace netmaint

#endif  // NETMAINT_SCHEDULE_IO_HPP_
