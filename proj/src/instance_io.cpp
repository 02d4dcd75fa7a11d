#include "netmaint/instance_io.hpp"

#include "json.hpp"
#include "netmaint/errors.hpp"
#include "netmaint/json_util.hpp"

namespace netmaint {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  doc["nodes"] = instance.nodes;
  doc["source"] = instance.source;
  doc["sink"] = instance.sink;
  doc["horizon"] = to_string(instance.horizon);
  ordered_json edges = ordered_json::array();
  for (const Edge& e : instance.edges) {
    ordered_json item;
    item["id"] = e.id;
    item["u"] = e.u;
    item["v"] = e.v;
    item["release"] = to_string(e.release);
    item["deadline"] = to_string(e.deadline);
    item["processing"] = to_string(e.processing);
    item["preemptable"] = std::string(to_string(e.preemption));
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  if (!instance.metadata.empty()) {
    ordered_json meta = ordered_json::object();
    for (const auto& [key, value] : instance.metadata) meta[key] = value;
    doc["meta"] = std::move(meta);
  }
  return doc.dump();
}

Instance instance_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ValidationError(std::string("instance JSON does not parse: ") + err.what());
  }
  if (!doc.is_object()) throw ValidationError("instance JSON must be an object");

  Instance instance;
  try {
    instance.nodes = doc.at("nodes").get<std::vector<std::string>>();
    instance.source = doc.at("source").get<std::string>();
    instance.sink = doc.at("sink").get<std::string>();
    const ordered_json& edges = doc.at("edges");
    if (!edges.is_array()) throw ValidationError("\"edges\" must be an array");
    std::size_t position = 0;
    for (const ordered_json& item : edges) {
      ++position;
      Edge e;
      e.id = item.contains("id") ? item.at("id").get<std::string>()
                                 : "e" + std::to_string(position);
      e.u = item.at("u").get<std::string>();
      e.v = item.at("v").get<std::string>();
      e.release = json_rational(item.at("release"), "release");
      e.deadline = json_rational(item.at("deadline"), "deadline");
      e.processing = json_rational(item.at("processing"), "processing");
      e.preemption = item.contains("preemptable")
                         ? parse_preemption(item.at("preemptable").get<std::string>())
                         : Preemption::Arbitrary;
      instance.edges.push_back(std::move(e));
    }
    instance.horizon = doc.contains("horizon") ? json_rational(doc.at("horizon"), "horizon")
                                               : max_deadline(instance);
    if (doc.contains("meta")) {
      for (const auto& [key, value] : doc.at("meta").items()) {
        instance.metadata[key] = value.get<std::string>();
      }
    }
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("instance JSON has wrong shape: ") + err.what());
  }
  return instance;
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_text_file(path));
}

void save_instance(const std::string& path, const Instance& instance) {
  write_text_file(path, instance_to_json(instance) + "\n");
}

}  // namespace netmaint
