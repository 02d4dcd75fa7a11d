#include "netmaint/nonpreemptive_approx.hpp"

#include <algorithm>

#include "netmaint/errors.hpp"

namespace netmaint {

std::vector<Rational> latest_start_points(const Instance& instance) {
  std::vector<Rational> points;
  for (const Edge& e : instance.edges) points.push_back(e.latest_start());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Schedule build_candidate(const Instance& instance, const Rational& cut) {
  Schedule schedule;
  for (const Edge& e : instance.edges) {
    IntervalSet& set = schedule[e.id];
    if (e.processing == 0) continue;
    const Rational start = e.latest_start() < cut ? e.release : e.latest_start();
    set.push_back({start, start + e.processing});
  }
  return schedule;
}

Rational score_candidate(const Instance& instance, const Schedule& schedule,
                         const Rational& from, const Rational& to) {
  if (from >= to) return 0;
  std::vector<Rational> cuts{from, to};
  auto keep = [&](const Rational& t) {
    if (from < t && t < to) cuts.push_back(t);
  };
  for (const Edge& e : instance.edges) {
    keep(e.release);
    keep(e.release + e.processing);
    keep(e.latest_start());
    keep(e.deadline);
  }
  for (const auto& [id, set] : schedule) {
    for (const Interval& piece : set) {
      keep(piece.start);
      keep(piece.end);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const GraphIndex graph(instance);
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational mid = (cuts[k] + cuts[k + 1]) / 2;
    std::vector<bool> available(instance.edges.size(), true);
    for (std::size_t e = 0; e < instance.edges.size(); ++e) {
      const auto it = schedule.find(instance.edges[e].id);
      if (it == schedule.end()) continue;
      for (const Interval& piece : it->second) {
        if (piece.start < mid && mid < piece.end) available[e] = false;
      }
    }
    if (terminals_connected(graph, available)) total += cuts[k + 1] - cuts[k];
  }
  return total;
}

CandidateFamily build_family(const Instance& instance, Execution execution) {
  CandidateFamily family;
  family.cuts.push_back(0);
  for (const Rational& t : latest_start_points(instance)) family.cuts.push_back(t);
  family.cuts.push_back(instance.horizon);
  const std::size_t count = family.cuts.size() - 1;
  family.candidates.resize(count);

  auto make = [&](std::size_t k) {
    Candidate& c = family.candidates[k];
    c.from = family.cuts[k];
    c.to = family.cuts[k + 1];
    c.schedule = build_candidate(instance, c.to);
    c.score = score_candidate(instance, c.schedule, c.from, c.to);
  };
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < static_cast<long long>(count); ++k) make(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) make(k);
  }
  return family;
}

ApproxResult approx_max_connectivity(const Instance& instance, Execution execution) {
  require_valid(instance);
  for (const Edge& e : instance.edges) {
    if (e.preemption != Preemption::None) {
      throw PreconditionError("approximation needs non-preemptable jobs, edge " + e.id + " is " +
                              std::string(to_string(e.preemption)));
    }
  }
  ApproxResult result;
  result.family = build_family(instance, execution);
  std::size_t best = 0;
  for (std::size_t k = 1; k < result.family.candidates.size(); ++k) {
    if (result.family.candidates[k].score > result.family.candidates[best].score) best = k;
  }
  const Candidate& chosen = result.family.candidates[best];
  result.chosen = best + 1;
  result.schedule = chosen.schedule;
  result.reported_score = chosen.score;
  result.full_value = connected_time(instance, chosen.schedule);
  return result;
}

}  // namespace netmaint
