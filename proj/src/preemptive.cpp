#include "netmaint/preemptive.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "netmaint/errors.hpp"

namespace netmaint {

IntervalIndex build_interval_index(const Instance& instance) {
  std::vector<Rational> points = relevant_time_points(instance);
  if (instance.horizon > points.back()) points.push_back(instance.horizon);
  return IntervalIndex{std::move(points)};
}

std::size_t arc_tail(const GraphIndex& graph, std::size_t arc) {
  const auto& ends = graph.ends(arc_edge(arc));
  return arc % 2 == 0 ? ends.u : ends.v;
}

std::size_t arc_head(const GraphIndex& graph, std::size_t arc) {
  const auto& ends = graph.ends(arc_edge(arc));
  return arc % 2 == 0 ? ends.v : ends.u;
}

ConnectivityLp build_connectivity_lp(const Instance& instance) {
  const GraphIndex graph(instance);
  ConnectivityLp model;
  model.index = build_interval_index(instance);
  const std::size_t k = model.index.size();
  const std::size_t edges = graph.edge_count();
  LinearProgram& lp = model.lp;
  lp.set_sense(Sense::Maximize);

  for (std::size_t i = 0; i < k; ++i) {
    model.f_var.push_back(lp.add_variable("f" + std::to_string(i + 1), Rational(0), Rational(1)));
    lp.set_objective(model.f_var.back(), model.index.width(i));
  }
  model.y_var.assign(k, {});
  model.x_var.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t e = 0; e < edges; ++e) {
      model.y_var[i].push_back(lp.add_variable(
          "y" + std::to_string(i + 1) + "_" + instance.edges[e].id, Rational(0), Rational(1)));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < 2 * edges; ++a) {
      const std::string name = "x" + std::to_string(i + 1) + "_" +
                               graph.node_name(arc_tail(graph, a)) + "_" +
                               graph.node_name(arc_head(graph, a));
      model.x_var[i].push_back(lp.add_variable(name, Rational(0), Rational(1)));
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = 0; v < graph.node_count(); ++v) {
      std::vector<LpTerm> terms;
      for (const auto& [next, e] : graph.neighbours(v)) {
        const std::size_t out = graph.ends(e).u == v ? 2 * e : 2 * e + 1;
        terms.push_back({model.x_var[i][out], Rational(1)});
        terms.push_back({model.x_var[i][out ^ 1], Rational(-1)});
      }
      if (v == graph.source()) terms.push_back({model.f_var[i], Rational(-1)});
      if (v == graph.sink()) terms.push_back({model.f_var[i], Rational(1)});
      lp.add_constraint("flow" + std::to_string(i + 1) + "_" + graph.node_name(v),
                        std::move(terms), Relation::Equal, Rational(0));
    }
  }

  for (std::size_t e = 0; e < edges; ++e) {
    const Edge& edge = instance.edges[e];
    if (edge.processing == 0) continue;
    std::vector<LpTerm> terms;
    Rational inside = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const bool starts_in = model.index.start(i) >= edge.release;
      const bool ends_in = model.index.end(i) <= edge.deadline;
      const bool overlaps =
          model.index.start(i) < edge.deadline && model.index.end(i) > edge.release;
      if (overlaps && !(starts_in && ends_in)) {
        throw std::logic_error("interval straddles a window boundary");
      }
      if (!overlaps) continue;
      // Σ (1 - y) w >= p  <=>  -Σ w y >= p - Σ w
      terms.push_back({model.y_var[i][e], Rational(-model.index.width(i))});
      inside += model.index.width(i);
    }
    lp.add_constraint("proc_" + edge.id, std::move(terms), Relation::GreaterEqual,
                      edge.processing - inside);
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < 2 * edges; ++a) {
      lp.add_constraint("cap" + std::to_string(i + 1) + "_" + std::to_string(a),
                        {{model.x_var[i][a], Rational(1)},
                         {model.y_var[i][arc_edge(a)], Rational(-1)}},
                        Relation::LessEqual, Rational(0));
    }
  }
  return model;
}

IntervalFlow read_flow(const ConnectivityLp& model, const LpOutcome& outcome) {
  IntervalFlow flow;
  const auto& val = outcome.assignment;
  for (std::size_t i = 0; i < model.index.size(); ++i) {
    flow.f.push_back(val[model.f_var[i]]);
    std::vector<Rational> y;
    for (std::size_t var : model.y_var[i]) y.push_back(val[var]);
    flow.y.push_back(std::move(y));
    std::vector<Rational> x;
    for (std::size_t var : model.x_var[i]) x.push_back(val[var]);
    flow.x.push_back(std::move(x));
  }
  return flow;
}

namespace {

// Out-arcs per node.
std::vector<std::vector<std::size_t>> out_arcs(const GraphIndex& graph) {
  std::vector<std::vector<std::size_t>> out(graph.node_count());
  for (std::size_t a = 0; a < 2 * graph.edge_count(); ++a) out[arc_tail(graph, a)].push_back(a);
  return out;
}

// Finds a directed cycle through arcs with positive flow; returns its arcs or
// an empty vector.
std::vector<std::size_t> find_cycle(const GraphIndex& graph,
                                    const std::vector<std::vector<std::size_t>>& out,
                                    const std::vector<Rational>& x) {
  const std::size_t n = graph.node_count();
  std::vector<int> colour(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> via(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [node, pos] = stack.back();
      if (pos == out[node].size()) {
        colour[node] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t arc = out[node][pos++];
      if (x[arc] <= 0) continue;
      const std::size_t head = arc_head(graph, arc);
      if (colour[head] == 1) {
        std::vector<std::size_t> cycle{arc};
        for (std::size_t at = node; at != head; at = arc_tail(graph, via[at])) {
          cycle.push_back(via[at]);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (colour[head] == 0) {
        colour[head] = 1;
        via[head] = arc;
        stack.emplace_back(head, 0);
      }
    }
  }
  return {};
}

}  // namespace

IntervalFlow cancel_circulations(const GraphIndex& graph, IntervalFlow flow) {
  const auto out = out_arcs(graph);
  for (std::vector<Rational>& x : flow.x) {
    for (;;) {
      const std::vector<std::size_t> cycle = find_cycle(graph, out, x);
      if (cycle.empty()) break;
      Rational bottleneck = x[cycle.front()];
      for (std::size_t a : cycle) bottleneck = std::min(bottleneck, x[a]);
      for (std::size_t a : cycle) x[a] -= bottleneck;
    }
  }
  return flow;
}

PathDecomposition path_decompose(const GraphIndex& graph, const IntervalFlow& flow) {
  const auto out = out_arcs(graph);
  PathDecomposition result(flow.x.size());
  for (std::size_t i = 0; i < flow.x.size(); ++i) {
    std::vector<Rational> x = flow.x[i];
    Rational remaining = flow.f[i];
    while (remaining > 0) {
      FlowPath path;
      std::vector<bool> visited(graph.node_count(), false);
      std::size_t at = graph.source();
      visited[at] = true;
      while (at != graph.sink()) {
        std::size_t next_arc = x.size();
        for (std::size_t a : out[at]) {
          if (x[a] > 0) {
            next_arc = a;
            break;
          }
        }
        if (next_arc == x.size()) throw std::logic_error("flow does not reach the sink");
        at = arc_head(graph, next_arc);
        if (visited[at]) throw std::logic_error("flow still contains a cycle");
        visited[at] = true;
        path.arcs.push_back(next_arc);
      }
      path.value = remaining;
      for (std::size_t a : path.arcs) path.value = std::min(path.value, x[a]);
      for (std::size_t a : path.arcs) x[a] -= path.value;
      remaining -= path.value;
      result[i].push_back(std::move(path));
    }
  }
  return result;
}

std::vector<IntervalSet> reserved_intervals(const Instance& instance, const IntervalIndex& index,
                                            const PathDecomposition& paths) {
  std::vector<IntervalSet> reserved(instance.edges.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Rational cursor = index.start(i);
    for (const FlowPath& path : paths[i]) {
      const Rational next = cursor + index.width(i) * path.value;
      for (std::size_t a : path.arcs) reserved[arc_edge(a)].push_back({cursor, next});
      cursor = next;
    }
  }
  return reserved;
}

Schedule extract_schedule(const Instance& instance, const IntervalIndex& index,
                          const IntervalFlow& /*flow*/, const PathDecomposition& paths) {
  const std::vector<IntervalSet> reserved = reserved_intervals(instance, index, paths);
  Schedule schedule;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const Edge& edge = instance.edges[e];
    IntervalSet& placed = schedule[edge.id];
    Rational left = edge.processing;
    Rational cursor = edge.release;
    const IntervalSet blocked = merge_union(clip(reserved[e], edge.release, edge.deadline));
    auto take = [&](const Rational& gap_end) {
      if (left == 0 || cursor >= gap_end) return;
      const Rational amount = std::min(left, Rational(gap_end - cursor));
      placed.push_back({cursor, cursor + amount});
      left -= amount;
    };
    for (const Interval& b : blocked) {
      take(b.start);
      cursor = b.end;
    }
    take(edge.deadline);
    if (left != 0) throw std::logic_error("job of edge " + edge.id + " does not fit");
  }
  return schedule;
}

namespace {

void require_arbitrary(const Instance& instance) {
  for (const Edge& e : instance.edges) {
    if (e.preemption != Preemption::Arbitrary) {
      throw PreconditionError("preemptive solver needs arbitrary preemption, edge " + e.id +
                              " is " + std::string(to_string(e.preemption)));
    }
  }
}

}  // namespace

Rational preemptive_optimum(const Instance& instance) {
  require_valid(instance);
  require_arbitrary(instance);
  const Instance normal = normalize_parallel_edges(instance);
  const ConnectivityLp model = build_connectivity_lp(normal);
  const LpOutcome outcome = solve_lp(model.lp);
  if (outcome.status != LpStatus::Optimal) {
    throw std::logic_error("connectivity LP is " + to_string(outcome.status));
  }
  return outcome.value;
}

Solution solve_preemptive(const Instance& instance, Objective objective) {
  require_valid(instance);
  require_arbitrary(instance);
  const Instance normal = normalize_parallel_edges(instance);
  const GraphIndex graph(normal);
  const ConnectivityLp model = build_connectivity_lp(normal);
  const LpOutcome outcome = solve_lp(model.lp);
  if (outcome.status != LpStatus::Optimal) {
    throw std::logic_error("connectivity LP is " + to_string(outcome.status));
  }
  const IntervalFlow flow = cancel_circulations(graph, read_flow(model, outcome));
  const PathDecomposition paths = path_decompose(graph, flow);
  Schedule full = extract_schedule(normal, model.index, flow, paths);

  Schedule schedule;
  for (const Edge& e : instance.edges) {
    IntervalSet set = std::move(full[e.id]);
    schedule[e.id] = merge_union(std::move(set));
  }
  const Rational connected = connected_time(instance, schedule);
  if (connected != outcome.value) {
    throw std::logic_error("extracted schedule connects " + to_string(connected) +
                           " but the LP optimum is " + to_string(outcome.value));
  }
  return {std::move(schedule), objective_value(instance, objective, connected)};
}

}  // namespace netmaint
