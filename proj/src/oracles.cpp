#include "netmaint/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "netmaint/errors.hpp"
#include "netmaint/path_solvers.hpp"
#include "netmaint/preemptive.hpp"
#include "netmaint/slot_grid.hpp"
#include "search.hpp"
#include "slot_search.hpp"

namespace netmaint {

namespace detail {

std::vector<std::size_t> order_by_width(const Instance& instance) {
  std::vector<std::size_t> order(instance.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.edges[a].window_length() < instance.edges[b].window_length();
  });
  return order;
}

namespace {

struct SlotState {
  SlotGrid grid;
  const std::vector<std::size_t>* order;
  const std::vector<std::vector<Placement>>* choices;
  std::vector<std::size_t> marks;

  void apply(std::size_t pos, std::size_t c) {
    marks.push_back(grid.checkpoint());
    netmaint::apply(grid, (*order)[pos], (*choices)[pos][c]);
  }
  void undo(std::size_t pos, std::size_t c) {
    netmaint::rollback(grid, (*order)[pos], (*choices)[pos][c], marks.back());
    marks.pop_back();
  }
  long long bound() const { return grid.counted_connected(); }
  long long leaf() const { return grid.counted_connected(); }
};

}  // namespace

SearchResult slot_search(const Instance& instance, Objective objective,
                         const OracleOptions& options, Regime regime, bool path_mode,
                         const std::vector<std::size_t>& order) {
  SlotState state{SlotGrid(instance, options.resolution, path_mode), &order, nullptr, {}};
  SlotGrid& grid = state.grid;
  Rational from = 0;
  Rational to = instance.horizon;
  if (options.window) {
    from = options.window->start;
    to = options.window->end;
    if (from < 0 || to > instance.horizon || from > to) {
      throw ValidationError("counting window must lie inside [0, T]");
    }
    grid.set_counting_window(grid.to_slot(from), grid.to_slot(to));
  }

  std::vector<std::vector<Placement>> choices;
  std::vector<std::size_t> widths;
  for (std::size_t e : order) {
    const Edge& edge = instance.edges[e];
    choices.push_back(regime == Regime::Contiguous ? contiguous_placements(edge, grid)
                                                   : unit_slot_placements(edge, grid));
    const auto allowed = options.allowed_starts.find(edge.id);
    if (allowed != options.allowed_starts.end() && regime == Regime::Contiguous &&
        edge.processing > 0) {
      std::vector<Placement> kept;
      for (Placement& p : choices.back()) {
        const Rational start = grid.to_time(p.runs.front().first);
        if (std::find(allowed->second.begin(), allowed->second.end(), start) !=
            allowed->second.end()) {
          kept.push_back(std::move(p));
        }
      }
      choices.back() = std::move(kept);
    }
    if (choices.back().empty()) {
      throw PreconditionError("edge " + edge.id + " has no admissible placement");
    }
    widths.push_back(choices.back().size());
  }
  state.choices = &choices;

  const auto outcome = search<long long>(state, widths, options.budget.max_nodes,
                                         grid.counted_slots(), options.execution);
  SearchResult result;
  result.nodes = outcome.nodes;
  result.budget_exceeded = outcome.exceeded;
  if (!outcome.best) {
    if (!outcome.exceeded) throw std::logic_error("search space is empty");
    return result;
  }

  Schedule schedule;
  for (const Edge& edge : instance.edges) schedule[edge.id];
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    schedule[instance.edges[order[pos]].id] =
        merge_union(placement_intervals(grid, choices[pos][(*outcome.best)[pos]]));
  }
  const FeasibilityReport report = check_feasible(instance, schedule);
  if (!report.feasible()) throw std::logic_error("oracle built an infeasible schedule");

  const Rational connected = Rational(outcome.best_score) / options.resolution;
  const ConnectivityProfile profile = connectivity_profile(instance, schedule);
  const Rational swept = profile.connected_within(from, to);
  if (swept != connected) {
    throw std::logic_error("slot evaluation " + to_string(connected) + " disagrees with sweep " +
                           to_string(swept));
  }
  const Rational value =
      objective == Objective::MaxConnectivity ? connected : Rational(to - from - connected);
  result.solution = Solution{std::move(schedule), value};
  return result;
}

}  // namespace detail

namespace {

void require_mode(const Instance& instance, std::initializer_list<Preemption> allowed,
                  const char* solver) {
  for (const Edge& e : instance.edges) {
    if (std::find(allowed.begin(), allowed.end(), e.preemption) == allowed.end()) {
      throw PreconditionError(std::string(solver) + " does not accept " +
                              std::string(to_string(e.preemption)) + " jobs (edge " + e.id + ")");
    }
  }
}

void require_grid_data(const Instance& instance, int resolution) {
  // Constructing a grid checks T; the edges are checked here so the message
  // names the offending edge.
  const SlotGrid grid(instance, resolution, true);
  for (const Edge& e : instance.edges) {
    for (const Rational* t : {&e.release, &e.deadline, &e.processing}) {
      if (!is_integer(*t * resolution)) {
        throw ValidationError("edge " + e.id + " has data off the 1/" +
                              std::to_string(resolution) + " grid");
      }
    }
  }
}

}  // namespace

SearchResult brute_nonpreemptive(const Instance& instance, Objective objective,
                                 const OracleOptions& options) {
  require_valid(instance);
  require_mode(instance, {Preemption::None}, "brute_nonpreemptive");
  require_grid_data(instance, options.resolution);
  return detail::slot_search(instance, objective, options, detail::Regime::Contiguous, false,
                             detail::order_by_width(instance));
}

SearchResult brute_integral_preemptive(const Instance& instance, Objective objective,
                                       const OracleOptions& options) {
  require_valid(instance);
  require_mode(instance, {Preemption::IntegralOnly}, "brute_integral_preemptive");
  require_grid_data(instance, 1);
  require_grid_data(instance, options.resolution);
  return detail::slot_search(instance, objective, options, detail::Regime::UnitSlots, false,
                             detail::order_by_width(instance));
}

namespace {

// Scores are connected time minus T, i.e. minus the disconnected time.
struct MixedState {
  SlotGrid grid;
  Instance fixed;  // None jobs replaced by tight Arbitrary jobs at their starts
  const Instance* instance;
  const std::vector<std::size_t>* order;
  const std::vector<std::vector<Placement>>* choices;

  void apply(std::size_t pos, std::size_t c) {
    const std::size_t e = (*order)[pos];
    const Placement& placement = (*choices)[pos][c];
    netmaint::apply(grid, e, placement);
    if (!placement.runs.empty()) {
      fixed.edges[e].release = grid.to_time(placement.runs.front().first);
      fixed.edges[e].deadline = grid.to_time(placement.runs.front().second);
    }
  }
  void undo(std::size_t pos, std::size_t c) {
    const std::size_t e = (*order)[pos];
    netmaint::revert(grid, e, (*choices)[pos][c]);
    fixed.edges[e].release = instance->edges[e].release;
    fixed.edges[e].deadline = instance->edges[e].deadline;
  }
  Rational bound() const {
    return Rational(grid.counted_connected() - grid.counted_slots()) / grid.resolution();
  }
  Rational leaf() const { return preemptive_optimum(fixed) - fixed.horizon; }
};

}  // namespace

SearchResult brute_mixed(const Instance& instance, Objective objective,
                         const OracleOptions& options) {
  require_valid(instance);
  require_path(instance);
  require_mode(instance, {Preemption::Arbitrary, Preemption::None}, "brute_mixed");
  if (options.window) throw PreconditionError("brute_mixed does not support a counting window");
  require_grid_data(instance, options.resolution);

  std::vector<std::size_t> order;
  for (std::size_t e : detail::order_by_width(instance)) {
    if (instance.edges[e].preemption == Preemption::None) order.push_back(e);
  }
  MixedState state{SlotGrid(instance, options.resolution, true),
                   with_preemption(instance, Preemption::Arbitrary), &instance, &order, nullptr};
  std::vector<std::vector<Placement>> choices;
  std::vector<std::size_t> widths;
  for (std::size_t e : order) {
    choices.push_back(contiguous_placements(instance.edges[e], state.grid));
    widths.push_back(choices.back().size());
  }
  state.choices = &choices;

  const auto outcome = detail::search<Rational>(state, widths, options.budget.max_nodes,
                                                Rational(0), options.execution);
  SearchResult result;
  result.nodes = outcome.nodes;
  result.budget_exceeded = outcome.exceeded;
  if (!outcome.best) {
    if (!outcome.exceeded) throw std::logic_error("search space is empty");
    return result;
  }

  for (std::size_t pos = 0; pos < order.size(); ++pos) state.apply(pos, (*outcome.best)[pos]);
  const Solution fixed = solve_preemptive(state.fixed, Objective::MaxConnectivity);
  Schedule schedule;
  for (const Edge& edge : instance.edges) schedule[edge.id] = fixed.schedule.at(edge.id);
  const FeasibilityReport report = check_feasible(instance, schedule);
  if (!report.feasible()) throw std::logic_error("brute_mixed built an infeasible schedule");
  const Rational connected = connected_time(instance, schedule);
  if (connected - instance.horizon != outcome.best_score) {
    throw std::logic_error("brute_mixed schedule does not reproduce its score");
  }
  result.solution = Solution{std::move(schedule), objective_value(instance, objective, connected)};
  return result;
}

}  // namespace netmaint
