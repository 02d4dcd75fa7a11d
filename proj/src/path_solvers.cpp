#include "netmaint/path_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "netmaint/errors.hpp"
#include "netmaint/preemptive.hpp"
#include "slot_search.hpp"

namespace netmaint {

std::optional<std::vector<std::size_t>> path_order(const Instance& instance) {
  if (instance.edges.empty()) return std::nullopt;
  const GraphIndex graph(instance);
  std::vector<bool> used(graph.edge_count(), false);
  std::vector<bool> visited(graph.node_count(), false);
  std::vector<std::size_t> order;
  std::size_t at = graph.source();
  visited[at] = true;
  while (at != graph.sink()) {
    const auto& around = graph.neighbours(at);
    std::optional<std::pair<std::size_t, std::size_t>> step;
    for (const auto& hop : around) {
      if (used[hop.second]) continue;
      if (step) return std::nullopt;  // branching
      step = hop;
    }
    if (!step || visited[step->first]) return std::nullopt;
    used[step->second] = true;
    order.push_back(step->second);
    at = step->first;
    visited[at] = true;
  }
  if (order.size() != graph.edge_count()) return std::nullopt;
  return order;
}

bool is_path_instance(const Instance& instance) { return path_order(instance).has_value(); }

void require_path(const Instance& instance) {
  if (!is_path_instance(instance)) {
    throw PreconditionError("instance is not a single s+ to s- path");
  }
}

bool MaintenanceProfile::active_at(const Rational& t) const {
  for (const Interval& piece : active) {
    if (piece.start <= t && t < piece.end) return true;
  }
  return false;
}

std::vector<std::pair<Rational, bool>> MaintenanceProfile::steps() const {
  std::vector<std::pair<Rational, bool>> out;
  Rational at = 0;
  for (const Interval& piece : active) {
    if (piece.start > at) out.emplace_back(at, false);
    out.emplace_back(piece.start, true);
    at = piece.end;
  }
  if (at < horizon || out.empty()) out.emplace_back(at, false);
  return out;
}

MaintenanceProfile maintenance_profile(const Instance& instance, const Schedule& schedule) {
  require_valid(instance);
  require_path(instance);
  const FeasibilityReport report = check_feasible(instance, schedule);
  if (!report.feasible()) throw ValidationError("infeasible schedule: " + report.summary());
  IntervalSet all;
  for (const auto& [id, set] : schedule) all.insert(all.end(), set.begin(), set.end());
  MaintenanceProfile profile;
  profile.active = merge_union(std::move(all));
  profile.horizon = instance.horizon;
  profile.active_time = measure(profile.active);
  return profile;
}

Rational profile_midpoint(const MaintenanceProfile& profile, const Rational& target) {
  if (target < 0 || target > profile.active_time) {
    throw std::out_of_range("target outside [0, active time]");
  }
  if (target == 0) return 0;
  Rational before = 0;
  for (const Interval& piece : profile.active) {
    const Rational length = piece.length();
    if (before + length >= target) return piece.start + (target - before);
    before += length;
  }
  throw std::logic_error("profile measure inconsistent");
}

namespace {

void split_jobs(const Instance& instance, const Schedule& preemptive,
                const std::vector<std::size_t>& jobs, Schedule& out) {
  if (jobs.empty()) return;
  IntervalSet all;
  for (std::size_t j : jobs) {
    const IntervalSet& pieces = preemptive.at(instance.edges[j].id);
    all.insert(all.end(), pieces.begin(), pieces.end());
  }
  MaintenanceProfile profile;
  profile.active = merge_union(std::move(all));
  profile.horizon = instance.horizon;
  profile.active_time = measure(profile.active);
  if (profile.active_time == 0) return;  // only zero-length jobs remain

  const Rational mid = profile_midpoint(profile, profile.active_time / 2);
  std::vector<std::size_t> left, right;
  std::size_t placed = 0;
  for (std::size_t j : jobs) {
    const Edge& e = instance.edges[j];
    if (e.deadline < mid) {
      left.push_back(j);
    } else if (e.release > mid) {
      right.push_back(j);
    } else {
      ++placed;
      if (e.processing == 0) continue;
      const Rational start = std::clamp(Rational(mid - e.processing / 2), e.release,
                                        Rational(e.deadline - e.processing));
      out[e.id] = {{start, start + e.processing}};
    }
  }
  if (placed == 0) throw std::logic_error("no job window contains the midpoint");
  split_jobs(instance, preemptive, left, out);
  split_jobs(instance, preemptive, right, out);
}

void require_only(const Instance& instance, std::initializer_list<Preemption> allowed,
                  const char* solver) {
  for (const Edge& e : instance.edges) {
    if (std::find(allowed.begin(), allowed.end(), e.preemption) == allowed.end()) {
      throw PreconditionError(std::string(solver) + " does not accept " +
                              std::string(to_string(e.preemption)) + " jobs (edge " + e.id + ")");
    }
  }
}

}  // namespace

Schedule split_nonpreemptive(const Instance& instance, const Schedule& preemptive_schedule) {
  require_valid(instance);
  require_path(instance);
  const FeasibilityReport report =
      check_feasible(with_preemption(instance, Preemption::Arbitrary), preemptive_schedule);
  if (!report.feasible()) throw ValidationError("infeasible input schedule: " + report.summary());

  Schedule out;
  for (const Edge& e : instance.edges) out[e.id];
  std::vector<std::size_t> jobs(instance.edges.size());
  std::iota(jobs.begin(), jobs.end(), 0);
  split_jobs(instance, preemptive_schedule, jobs, out);
  return out;
}

SearchResult exact_nonpreemptive_path(const Instance& instance, Objective objective,
                                      const ExactPathOptions& options) {
  require_valid(instance);
  require_path(instance);
  require_only(instance, {Preemption::None}, "exact_nonpreemptive_path");
  for (const Edge& e : instance.edges) {
    if (!is_integer(e.release) || !is_integer(e.deadline) || !is_integer(e.processing)) {
      throw ValidationError("edge " + e.id + " has non-integral data");
    }
  }
  if (!is_integer(instance.horizon)) throw ValidationError("horizon is not integral");

  std::vector<std::size_t> order(instance.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Edge& x = instance.edges[a];
    const Edge& y = instance.edges[b];
    if (x.release != y.release) return x.release < y.release;
    return x.deadline < y.deadline;
  });
  OracleOptions oracle;
  oracle.budget = options.budget;
  oracle.resolution = options.resolution;
  return detail::slot_search(instance, objective, oracle, detail::Regime::Contiguous, true, order);
}

Solution mixed_two_approx(const Instance& instance, Objective objective,
                          const SearchBudget& budget) {
  require_valid(instance);
  require_path(instance);
  require_only(instance, {Preemption::Arbitrary, Preemption::None}, "mixed_two_approx");

  Instance preemptive_part = instance;
  Instance fixed_part = instance;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    if (instance.edges[e].preemption == Preemption::None) {
      preemptive_part.edges[e].processing = 0;
      preemptive_part.edges[e].preemption = Preemption::Arbitrary;
    } else {
      fixed_part.edges[e].processing = 0;
      fixed_part.edges[e].preemption = Preemption::None;
    }
  }
  const Solution loose = solve_preemptive(preemptive_part, Objective::MinDisconnectivity);
  ExactPathOptions options;
  options.budget = budget;
  const SearchResult fixed = exact_nonpreemptive_path(fixed_part, Objective::MinDisconnectivity,
                                                      options);
  if (!fixed.solution) {
    throw BudgetExceededError("non-preemptive part exceeded the budget of " +
                              std::to_string(budget.max_nodes) + " nodes");
  }

  Schedule schedule;
  for (const Edge& e : instance.edges) {
    const Schedule& from =
        e.preemption == Preemption::None ? fixed.solution->schedule : loose.schedule;
    schedule[e.id] = from.at(e.id);
  }
  const FeasibilityReport report = check_feasible(instance, schedule);
  if (!report.feasible()) throw std::logic_error("overlay is infeasible: " + report.summary());
  const Rational connected = connected_time(instance, schedule);
  return {std::move(schedule), objective_value(instance, objective, connected)};
}

}  // namespace netmaint
