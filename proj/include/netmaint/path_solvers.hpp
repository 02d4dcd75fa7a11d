#ifndef NETMAINT_PATH_SOLVERS_HPP_
#define NETMAINT_PATH_SOLVERS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/solution.hpp"

namespace netmaint {

// Edge indices in order from s⁺ to s⁻ when the edges form one simple s⁺–s⁻
// path (isolated extra nodes are tolerated), otherwise nullopt.
std::optional<std::vector<std::size_t>> path_order(const Instance& instance);
bool is_path_instance(const Instance& instance);

// Throws PreconditionError unless the instance is a path.
void require_path(const Instance& instance);

// Indicator of "some job is being processed" on [0,T]. On a path this is
// exactly the disconnected set.
struct MaintenanceProfile {
  IntervalSet active;  // merged, sorted
  Rational horizon;
  Rational active_time;

  bool active_at(const Rational& t) const;
  // Breakpoints 0 = b_0 < … < b_k = T with the value on each [b_i, b_{i+1}).
  std::vector<std::pair<Rational, bool>> steps() const;
};

MaintenanceProfile maintenance_profile(const Instance& instance, const Schedule& schedule);

// Smallest t with measure(active ∩ [0,t]) = target.
Rational profile_midpoint(const MaintenanceProfile& profile, const Rational& target);

// Turns a feasible (typically preemptive) schedule of a path instance into a
// non-preemptive one: find the midpoint t̄ of the active time, centre every
// job whose window contains t̄ on it (clamped into the window), and recurse on
// the jobs entirely left and entirely right of t̄ with the input schedule
// restricted to them.
Schedule split_nonpreemptive(const Instance& instance, const Schedule& preemptive_schedule);

struct ExactPathOptions {
  SearchBudget budget;
  int resolution = 1;  // 2 searches half-integral starts too
};

// Minimum busy time (= disconnected time) of a non-preemptive path instance
// with integral data by branch and bound over grid starts; jobs are taken in
// order of release date, then deadline.
SearchResult exact_nonpreemptive_path(const Instance& instance, Objective objective,
                                      const ExactPathOptions& options = {});

// Path instance with Arbitrary and None jobs: solves both parts optimally on
// their own and overlays them. Disconnected time is at most twice the mixed
// optimum. Throws BudgetExceededError if the exact non-preemptive part runs
// out of budget.
Solution mixed_two_approx(const Instance& instance, Objective objective,
                          const SearchBudget& budget = {});

}  // namespace netmaint

#endif  // NETMAINT_PATH_SOLVERS_HPP_
