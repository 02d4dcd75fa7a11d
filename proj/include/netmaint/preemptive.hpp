#ifndef NETMAINT_PREEMPTIVE_HPP_
#define NETMAINT_PREEMPTIVE_HPP_

#include <cstddef>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/lp.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/solution.hpp"

namespace netmaint {

// Consecutive relevant time points. Zero-width intervals never appear.
struct IntervalIndex {
  std::vector<Rational> boundaries;

  std::size_t size() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
  const Rational& start(std::size_t i) const { return boundaries[i]; }
  const Rational& end(std::size_t i) const { return boundaries[i + 1]; }
  Rational width(std::size_t i) const { return boundaries[i + 1] - boundaries[i]; }
};

// {0} ∪ releases ∪ deadlines, plus the horizon when it lies beyond every
// deadline.
IntervalIndex build_interval_index(const Instance& instance);

// Arc 2e runs u→v of edge e, arc 2e+1 runs v→u.
inline std::size_t arc_edge(std::size_t arc) { return arc / 2; }
std::size_t arc_tail(const GraphIndex& graph, std::size_t arc);
std::size_t arc_head(const GraphIndex& graph, std::size_t arc);

// Per interval: connectivity fraction f, edge availabilities y and arc flows x.
struct IntervalFlow {
  std::vector<Rational> f;
  std::vector<std::vector<Rational>> y;  // [interval][edge]
  std::vector<std::vector<Rational>> x;  // [interval][arc]
};

struct ConnectivityLp {
  LinearProgram lp;
  IntervalIndex index;
  std::vector<std::size_t> f_var;
  std::vector<std::vector<std::size_t>> y_var;
  std::vector<std::vector<std::size_t>> x_var;
};

// Flow LP maximising Σ w_i f_i: conservation per node and interval, arc flow
// bounded by edge availability, and enough unavailability inside each window
// to cover the processing time. Expects a valid instance without parallel
// edges.
ConnectivityLp build_connectivity_lp(const Instance& instance);

IntervalFlow read_flow(const ConnectivityLp& model, const LpOutcome& outcome);

// Removes flow around directed cycles (including u→v→u pairs) interval by
// interval. Net s⁺→s⁻ value is unchanged and no arc value grows.
IntervalFlow cancel_circulations(const GraphIndex& graph, IntervalFlow flow);

struct FlowPath {
  std::vector<std::size_t> arcs;  // s⁺ to s⁻ in order
  Rational value;
};

using PathDecomposition = std::vector<std::vector<FlowPath>>;  // [interval]

// Peels s⁺→s⁻ paths off an acyclic flow. Throws std::logic_error when the
// flow does not conserve.
PathDecomposition path_decompose(const GraphIndex& graph, const IntervalFlow& flow);

// Per edge (instance order), the subintervals reserved for connectivity by
// the paths using it: inside each interval, paths get consecutive pieces of
// length w_i·value packed from the interval's left end.
std::vector<IntervalSet> reserved_intervals(const Instance& instance, const IntervalIndex& index,
                                            const PathDecomposition& paths);

// Places each job earliest-first into its window minus its reserved pieces.
// Throws std::logic_error if some job does not fit.
Schedule extract_schedule(const Instance& instance, const IntervalIndex& index,
                          const IntervalFlow& flow, const PathDecomposition& paths);

// Optimal preemptive schedule. Every job must be Arbitrary; parallel edges are
// handled internally. The returned value is exact and re-checked against the
// evaluator.
Solution solve_preemptive(const Instance& instance, Objective objective);

// Only the LP optimum (connected time), without schedule extraction.
Rational preemptive_optimum(const Instance& instance);

}  // namespace netmaint

#endif  // NETMAINT_PREEMPTIVE_HPP_
