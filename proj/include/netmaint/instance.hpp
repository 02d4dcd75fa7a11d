#ifndef NETMAINT_INSTANCE_HPP_
#define NETMAINT_INSTANCE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netmaint/rational.hpp"

namespace netmaint {

// How a maintenance job may be split over time.
enum class Preemption {
  Arbitrary,     // split at any point
  IntegralOnly,  // split only at integer time points
  None,          // one contiguous interval
};

std::string_view to_string(Preemption mode);
Preemption parse_preemption(std::string_view text);

// An undirected edge together with its maintenance job.
struct Edge {
  std::string id;
  std::string u;
  std::string v;
  Rational release;
  Rational deadline;
  Rational processing;
  Preemption preemption = Preemption::Arbitrary;

  Rational window_length() const { return deadline - release; }
  Rational latest_start() const { return deadline - processing; }
  bool tight() const { return processing == window_length(); }
};

struct Instance {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::string source;
  std::string sink;
  Rational horizon;
  // Free-form provenance (generator parameters, padding counts). Not used by
  // any solver.
  std::map<std::string, std::string> metadata;

  const Edge* find_edge(std::string_view id) const;
};

struct Violation {
  std::string subject;  // edge id or field name
  std::string reason;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Instance& instance);

// Throws ValidationError carrying the report summary when invalid.
void require_valid(const Instance& instance);

Rational max_deadline(const Instance& instance);

bool has_parallel_edges(const Instance& instance);

// Splits every parallel edge beyond the first between a node pair into two
// edges through a fresh node. The half incident to the lexicographically
// smaller endpoint keeps the original id and job; the other half gets a
// zero-processing job with window [0, T].
Instance normalize_parallel_edges(const Instance& instance);

// Sorted distinct {0} ∪ {r_e, d_e}.
std::vector<Rational> relevant_time_points(const Instance& instance);

// Copy with every job switched to `mode`.
Instance with_preemption(const Instance& instance, Preemption mode);

// True when every release, deadline, processing time and the horizon are
// integers.
bool has_integral_data(const Instance& instance);

// Dense integer view of the graph: nodes and edges numbered in instance
// order, adjacency lists of (neighbour, edge index).
class GraphIndex {
 public:
  struct Ends {
    std::size_t u;
    std::size_t v;
  };

  explicit GraphIndex(const Instance& instance);

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return ends_.size(); }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::string& node_name(std::size_t node) const { return names_[node]; }
  const Ends& ends(std::size_t edge) const { return ends_[edge]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(std::size_t node) const {
    return adjacency_[node];
  }
  std::size_t node_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Ends> ends_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
};

// Breadth-first s⁺–s⁻ reachability over the edges with available[e] true.
bool terminals_connected(const GraphIndex& graph, const std::vector<bool>& available);

}  // namespace netmaint

#endif  // NETMAINT_INSTANCE_HPP_
