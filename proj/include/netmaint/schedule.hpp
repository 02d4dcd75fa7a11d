#ifndef NETMAINT_SCHEDULE_HPP_
#define NETMAINT_SCHEDULE_HPP_

#include <map>
#include <string>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/rational.hpp"

namespace netmaint {

// Closed interval [start, end]. For availability it counts as [start, end).
struct Interval {
  Rational start;
  Rational end;

  Rational length() const { return end - start; }
  bool operator==(const Interval& other) const = default;
};

using IntervalSet = std::vector<Interval>;

// Maintenance intervals per edge id. A missing entry means "no maintenance".
using Schedule = std::map<std::string, IntervalSet>;

Rational measure(const IntervalSet& set);

// Sorted union with overlapping or touching intervals merged and empty ones
// dropped.
IntervalSet merge_union(IntervalSet set);

Rational union_measure(const IntervalSet& set);

// The part of `set` inside [from, to].
IntervalSet clip(const IntervalSet& set, const Rational& from, const Rational& to);

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  std::string summary() const;
};

FeasibilityReport check_feasible(const Instance& instance, const Schedule& schedule);

struct Atom {
  Interval span;
  bool connected = true;
};

struct ConnectivityProfile {
  std::vector<Atom> atoms;
  Rational connected_time;
  Rational disconnected_time;

  // Connected measure inside [from, to].
  Rational connected_within(const Rational& from, const Rational& to) const;
};

// Throws ValidationError when the schedule is infeasible.
ConnectivityProfile connectivity_profile(const Instance& instance, const Schedule& schedule);

// Same sweep without the feasibility gate; only unknown edge ids are rejected.
// Useful for partial or deliberately malformed assignments.
ConnectivityProfile connectivity_profile_unchecked(const Instance& instance,
                                                   const Schedule& schedule);

Rational connected_time(const Instance& instance, const Schedule& schedule);
Rational disconnected_time(const Instance& instance, const Schedule& schedule);

// Union of two schedules over disjoint edge sets.
Schedule overlay(const Schedule& a, const Schedule& b);

}  // namespace netmaint

#endif  // NETMAINT_SCHEDULE_HPP_
