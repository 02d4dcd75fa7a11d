#include "netmaint/schedule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "netmaint/errors.hpp"

namespace netmaint {

Rational measure(const IntervalSet& set) {
  Rational total = 0;
  for (const Interval& iv : set) total += iv.length();
  return total;
}

IntervalSet merge_union(IntervalSet set) {
  std::sort(set.begin(), set.end(), [](const Interval& a, const Interval& b) {
    return a.start < b.start || (a.start == b.start && a.end < b.end);
  });
  IntervalSet out;
  for (const Interval& iv : set) {
    if (iv.end <= iv.start) continue;
    if (!out.empty() && iv.start <= out.back().end) {
      out.back().end = std::max(out.back().end, iv.end);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

Rational union_measure(const IntervalSet& set) { return measure(merge_union(set)); }

IntervalSet clip(const IntervalSet& set, const Rational& from, const Rational& to) {
  IntervalSet out;
  for (const Interval& iv : set) {
    const Rational a = std::max(iv.start, from);
    const Rational b = std::min(iv.end, to);
    if (a < b) out.push_back({a, b});
  }
  return out;
}

std::string FeasibilityReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].subject << ": " << violations[i].reason;
  }
  return out.str();
}

FeasibilityReport check_feasible(const Instance& instance, const Schedule& schedule) {
  FeasibilityReport report;
  auto flag = [&](const std::string& id, std::string reason) {
    report.violations.push_back({id, std::move(reason)});
  };

  for (const auto& [id, set] : schedule) {
    if (!instance.find_edge(id)) flag(id, "unknown edge");
  }

  static const IntervalSet kEmpty;
  for (const Edge& e : instance.edges) {
    const auto it = schedule.find(e.id);
    const IntervalSet& set = it == schedule.end() ? kEmpty : it->second;

    bool reversed = false;
    bool outside = false;
    bool fractional = false;
    for (const Interval& iv : set) {
      if (iv.end < iv.start) reversed = true;
      if (iv.start < e.release || iv.end > e.deadline) outside = true;
      if (!is_integer(iv.start) || !is_integer(iv.end)) fractional = true;
    }
    if (reversed) flag(e.id, "reversed interval");
    if (outside) flag(e.id, "outside window");

    IntervalSet sorted = set;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].start < sorted[i - 1].end) {
        flag(e.id, "overlapping intervals");
        break;
      }
    }

    if (measure(set) != e.processing) flag(e.id, "processing time not met");

    if (e.preemption == Preemption::None) {
      const std::size_t allowed = e.processing > 0 ? 1 : 0;
      if (set.size() > 1 || (allowed == 1 && set.size() != 1)) flag(e.id, "not contiguous");
    }
    if (e.preemption == Preemption::IntegralOnly && fractional) {
      flag(e.id, "non-integral preemption point");
    }
  }
  return report;
}

Rational ConnectivityProfile::connected_within(const Rational& from, const Rational& to) const {
  Rational total = 0;
  for (const Atom& atom : atoms) {
    if (!atom.connected) continue;
    const Rational a = std::max(atom.span.start, from);
    const Rational b = std::min(atom.span.end, to);
    if (a < b) total += b - a;
  }
  return total;
}

ConnectivityProfile connectivity_profile_unchecked(const Instance& instance,
                                                   const Schedule& schedule) {
  const GraphIndex graph(instance);
  std::vector<const IntervalSet*> sets(graph.edge_count(), nullptr);
  std::map<std::string, std::size_t> position;
  for (std::size_t k = 0; k < instance.edges.size(); ++k) position[instance.edges[k].id] = k;

  std::set<Rational> events{Rational(0), instance.horizon};
  for (const auto& [id, set] : schedule) {
    const auto it = position.find(id);
    if (it == position.end()) throw ValidationError("schedule names unknown edge '" + id + "'");
    sets[it->second] = &set;
    for (const Interval& iv : set) {
      if (iv.start > 0 && iv.start < instance.horizon) events.insert(iv.start);
      if (iv.end > 0 && iv.end < instance.horizon) events.insert(iv.end);
    }
  }

  ConnectivityProfile profile;
  profile.connected_time = 0;
  profile.disconnected_time = 0;
  const std::vector<Rational> points(events.begin(), events.end());
  std::vector<bool> available(graph.edge_count());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational& a = points[i];
    const Rational& b = points[i + 1];
    const Rational mid = (a + b) / 2;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      bool maintained = false;
      if (sets[k]) {
        for (const Interval& iv : *sets[k]) {
          if (iv.start < mid && mid < iv.end) {
            maintained = true;
            break;
          }
        }
      }
      available[k] = !maintained;
    }
    const bool connected = terminals_connected(graph, available);
    profile.atoms.push_back({{a, b}, connected});
    (connected ? profile.connected_time : profile.disconnected_time) += b - a;
  }
  return profile;
}

ConnectivityProfile connectivity_profile(const Instance& instance, const Schedule& schedule) {
  const FeasibilityReport report = check_feasible(instance, schedule);
  if (!report.feasible()) throw ValidationError("infeasible schedule: " + report.summary());
  return connectivity_profile_unchecked(instance, schedule);
}

Rational connected_time(const Instance& instance, const Schedule& schedule) {
  return connectivity_profile(instance, schedule).connected_time;
}

Rational disconnected_time(const Instance& instance, const Schedule& schedule) {
  return connectivity_profile(instance, schedule).disconnected_time;
}

Schedule overlay(const Schedule& a, const Schedule& b) {
  Schedule out = a;
  for (const auto& [id, set] : b) {
    IntervalSet& target = out[id];
    target.insert(target.end(), set.begin(), set.end());
    std::sort(target.begin(), target.end(),
              [](const Interval& x, const Interval& y) { return x.start < y.start; });
  }
  return out;
}

}  // namespace netmaint
