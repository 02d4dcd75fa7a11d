#include "netmaint/instance.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "netmaint/errors.hpp"

namespace netmaint {

std::string_view to_string(Preemption mode) {
  switch (mode) {
    case Preemption::Arbitrary:
      return "arbitrary";
    case Preemption::IntegralOnly:
      return "integral";
    case Preemption::None:
      return "none";
  }
  return "none";
}

Preemption parse_preemption(std::string_view text) {
  if (text == "arbitrary") return Preemption::Arbitrary;
  if (text == "integral") return Preemption::IntegralOnly;
  if (text == "none") return Preemption::None;
  throw ValidationError("unknown preemption mode '" + std::string(text) + "'");
}

const Edge* Instance::find_edge(std::string_view id) const {
  for (const Edge& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].subject << ": " << violations[i].reason;
  }
  return out.str();
}

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  auto flag = [&](std::string subject, std::string reason) {
    report.violations.push_back({std::move(subject), std::move(reason)});
  };

  std::unordered_set<std::string> nodes;
  for (const std::string& n : instance.nodes) {
    if (!nodes.insert(n).second) flag("nodes", "duplicate node '" + n + "'");
  }
  if (!nodes.count(instance.source)) flag("source", "unknown node '" + instance.source + "'");
  if (!nodes.count(instance.sink)) flag("sink", "unknown node '" + instance.sink + "'");
  if (instance.source == instance.sink) flag("source", "terminals coincide");

  std::unordered_set<std::string> ids;
  for (const Edge& e : instance.edges) {
    if (e.id.empty()) flag("edges", "edge without id");
    if (!ids.insert(e.id).second) flag(e.id, "duplicate edge id");
    if (!nodes.count(e.u)) flag(e.id, "unknown endpoint '" + e.u + "'");
    if (!nodes.count(e.v)) flag(e.id, "unknown endpoint '" + e.v + "'");
    if (e.u == e.v) flag(e.id, "self-loop");
    if (e.release < 0) flag(e.id, "negative release");
    if (e.deadline < e.release) flag(e.id, "deadline before release");
    if (e.processing < 0) flag(e.id, "negative processing");
    if (e.processing > e.window_length()) flag(e.id, "processing exceeds window");
  }
  if (instance.horizon < 0) flag("horizon", "negative horizon");
  if (instance.horizon < max_deadline(instance)) flag("horizon", "horizon before latest deadline");
  return report;
}

void require_valid(const Instance& instance) {
  const ValidationReport report = validate(instance);
  if (!report.valid()) throw ValidationError("invalid instance: " + report.summary());
}

Rational max_deadline(const Instance& instance) {
  Rational latest = 0;
  for (const Edge& e : instance.edges) latest = std::max(latest, e.deadline);
  return latest;
}

namespace {

std::pair<std::string, std::string> sorted_pair(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string fresh_name(const std::string& base, std::unordered_set<std::string>& taken) {
  std::string name = base;
  for (int suffix = 2; taken.count(name); ++suffix) name = base + "." + std::to_string(suffix);
  taken.insert(name);
  return name;
}

}  // namespace

bool has_parallel_edges(const Instance& instance) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& e : instance.edges) {
    if (!seen.insert(sorted_pair(e.u, e.v)).second) return true;
  }
  return false;
}

Instance normalize_parallel_edges(const Instance& instance) {
  if (!has_parallel_edges(instance)) return instance;

  Instance out = instance;
  out.edges.clear();
  std::unordered_set<std::string> node_names(instance.nodes.begin(), instance.nodes.end());
  std::unordered_set<std::string> edge_ids;
  for (const Edge& e : instance.edges) edge_ids.insert(e.id);

  std::set<std::pair<std::string, std::string>> seen;
  for (const Edge& e : instance.edges) {
    const auto key = sorted_pair(e.u, e.v);
    if (seen.insert(key).second) {
      out.edges.push_back(e);
      continue;
    }
    const std::string mid = fresh_name(e.id + "~mid", node_names);
    out.nodes.push_back(mid);

    Edge carrying = e;
    carrying.u = key.first;
    carrying.v = mid;

    Edge idle;
    idle.id = fresh_name(e.id + "~split", edge_ids);
    idle.u = mid;
    idle.v = key.second;
    idle.release = 0;
    idle.deadline = instance.horizon;
    idle.processing = 0;
    idle.preemption = e.preemption;

    out.edges.push_back(std::move(carrying));
    out.edges.push_back(std::move(idle));
  }
  return out;
}

std::vector<Rational> relevant_time_points(const Instance& instance) {
  std::set<Rational> points{Rational(0)};
  for (const Edge& e : instance.edges) {
    points.insert(e.release);
    points.insert(e.deadline);
  }
  return {points.begin(), points.end()};
}

Instance with_preemption(const Instance& instance, Preemption mode) {
  Instance out = instance;
  for (Edge& e : out.edges) e.preemption = mode;
  return out;
}

bool has_integral_data(const Instance& instance) {
  if (!is_integer(instance.horizon)) return false;
  return std::all_of(instance.edges.begin(), instance.edges.end(), [](const Edge& e) {
    return is_integer(e.release) && is_integer(e.deadline) && is_integer(e.processing);
  });
}

GraphIndex::GraphIndex(const Instance& instance) : names_(instance.nodes) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
  adjacency_.resize(names_.size());
  ends_.reserve(instance.edges.size());
  for (std::size_t k = 0; k < instance.edges.size(); ++k) {
    const Edge& e = instance.edges[k];
    const std::size_t u = node_of(e.u);
    const std::size_t v = node_of(e.v);
    ends_.push_back({u, v});
    adjacency_[u].emplace_back(v, k);
    adjacency_[v].emplace_back(u, k);
  }
  source_ = node_of(instance.source);
  sink_ = node_of(instance.sink);
}

std::size_t GraphIndex::node_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown node '" + name + "'");
  return it->second;
}

bool terminals_connected(const GraphIndex& graph, const std::vector<bool>& available) {
  std::vector<bool> seen(graph.node_count(), false);
  std::deque<std::size_t> queue{graph.source()};
  seen[graph.source()] = true;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    if (node == graph.sink()) return true;
    for (const auto& [next, edge] : graph.neighbours(node)) {
      if (available[edge] && !seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace netmaint
