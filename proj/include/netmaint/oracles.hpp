#ifndef NETMAINT_ORACLES_HPP_
#define NETMAINT_ORACLES_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/solution.hpp"

namespace netmaint {

struct OracleOptions {
  SearchBudget budget;
  // Starts and preemption points lie on multiples of 1/resolution; 2 gives
  // the half-integral check of the integral-start assumption.
  int resolution = 1;
  Execution execution = Execution::Serial;
  // When set, only connectivity inside this window counts: Max reports the
  // connected time inside it, Min the disconnected time inside it.
  std::optional<Interval> window;
  // Non-preemptable jobs named here only try the listed start times. The
  // result is then optimal over the restricted space only.
  std::map<std::string, std::vector<Rational>> allowed_starts;
};

// Exhaustive search over grid starts in [r, d − p] for every job, edges
// ordered by window width (narrowest first), pruned by the connected time
// still reachable. All jobs must be non-preemptable.
SearchResult brute_nonpreemptive(const Instance& instance, Objective objective,
                                 const OracleOptions& options = {});

// Every job takes p unit slots of its window, preempting only at integral
// times. All jobs must be IntegralOnly.
SearchResult brute_integral_preemptive(const Instance& instance, Objective objective,
                                       const OracleOptions& options = {});

// Path instances mixing Arbitrary and None jobs: enumerates grid starts for
// the None jobs, fixes them as tight jobs and solves the rest with the
// preemptive LP. Pruned by the busy time the placed None jobs already force.
// The window option is not supported here.
SearchResult brute_mixed(const Instance& instance, Objective objective,
                         const OracleOptions& options = {});

}  // namespace netmaint

#endif  // NETMAINT_ORACLES_HPP_
