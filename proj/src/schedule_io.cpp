#include "netmaint/schedule_io.hpp"

#include "netmaint/errors.hpp"
#include "netmaint/json_util.hpp"

namespace netmaint {

using ordered_json = nlohmann::ordered_json;

std::string schedule_to_json(const Schedule& schedule) {
  ordered_json edges = ordered_json::object();
  for (const auto& [id, set] : schedule) {
    ordered_json list = ordered_json::array();
    for (const Interval& iv : set) list.push_back({to_string(iv.start), to_string(iv.end)});
    edges[id] = std::move(list);
  }
  ordered_json doc;
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Schedule schedule_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ValidationError(std::string("schedule JSON does not parse: ") + err.what());
  }
  Schedule schedule;
  try {
    for (const auto& [id, list] : doc.at("edges").items()) {
      IntervalSet& set = schedule[id];
      for (const ordered_json& pair : list) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ValidationError("interval of '" + id + "' must be a pair");
        }
        set.push_back({json_rational(pair[0], id), json_rational(pair[1], id)});
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("schedule JSON has wrong shape: ") + err.what());
  }
  return schedule;
}

Schedule load_schedule(const std::string& path) {
  return schedule_from_json(read_text_file(path));
}

void save_schedule(const std::string& path, const Schedule& schedule) {
  write_text_file(path, schedule_to_json(schedule) + "\n");
}

ordered_json profile_json(const ConnectivityProfile& profile) {
  ordered_json atoms = ordered_json::array();
  for (const Atom& atom : profile.atoms) {
    atoms.push_back({to_string(atom.span.start), to_string(atom.span.end), atom.connected});
  }
  ordered_json doc;
  doc["connected_time"] = to_string(profile.connected_time);
  doc["disconnected_time"] = to_string(profile.disconnected_time);
  doc["atoms"] = std::move(atoms);
  return doc;
}

ordered_json feasibility_json(const FeasibilityReport& report) {
  ordered_json list = ordered_json::array();
  for (const Violation& v : report.violations) list.push_back({{"edge", v.subject}, {"reason", v.reason}});
  ordered_json doc;
  doc["feasible"] = report.feasible();
  doc["violations"] = std::move(list);
  return doc;
}

}  // namespace netmaint
