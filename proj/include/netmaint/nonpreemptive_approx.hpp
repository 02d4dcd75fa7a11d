#ifndef NETMAINT_NONPREEMPTIVE_APPROX_HPP_
#define NETMAINT_NONPREEMPTIVE_APPROX_HPP_

#include <cstddef>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/solution.hpp"

namespace netmaint {

// Sorted distinct latest start times d − p.
std::vector<Rational> latest_start_points(const Instance& instance);

// Edges whose latest start lies before `cut` start at their release date, all
// others at their latest start. Zero-length jobs get no interval.
Schedule build_candidate(const Instance& instance, const Rational& cut);

// Connected measure of `schedule` inside [from, to], found by cutting the
// window at every r, r+p, d−p, d and schedule endpoint and testing
// reachability at each piece's midpoint.
Rational score_candidate(const Instance& instance, const Schedule& schedule,
                         const Rational& from, const Rational& to);

struct Candidate {
  Rational from;  // t_{i-1}
  Rational to;    // t_i
  Schedule schedule;
  Rational score;  // connected time of the schedule inside [from, to]
};

struct CandidateFamily {
  std::vector<Rational> cuts;  // t_0 = 0, the latest starts, t_{ℓ+1} = T
  std::vector<Candidate> candidates;  // candidates[i-1] is S_i, i = 1..ℓ+1
};

CandidateFamily build_family(const Instance& instance, Execution execution = Execution::Serial);

struct ApproxResult {
  CandidateFamily family;
  std::size_t chosen = 0;  // 1-based index of the returned candidate
  Schedule schedule;
  Rational reported_score;  // its score on its own window; OPT ≤ (ℓ+1)·this
  Rational full_value;      // its connected time over [0,T]
};

// Best candidate by window score, lowest index on ties. All jobs must be
// non-preemptable.
ApproxResult approx_max_connectivity(const Instance& instance,
                                     Execution execution = Execution::Serial);

}  // namespace netmaint

#endif  // NETMAINT_NONPREEMPTIVE_APPROX_HPP_
