#ifndef NETMAINT_TESTS_SUPPORT_HPP_
#define NETMAINT_TESTS_SUPPORT_HPP_

#include <concepts>
#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "netmaint/instance.hpp"
#include "netmaint/rational.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/schedule_io.hpp"

namespace testing {

using netmaint::Edge;
using netmaint::Instance;
using netmaint::Interval;
using netmaint::IntervalSet;
using netmaint::Preemption;
using netmaint::Rational;
using netmaint::Schedule;

inline Rational R(const char* text) { return netmaint::parse_rational(text); }
template <std::integral I>
inline Rational R(I n) {
  return Rational(static_cast<long long>(n));
}
inline Rational R(long long n, long long d) { return Rational(n) / d; }

inline Edge edge(std::string id, std::string u, std::string v, Rational r, Rational d, Rational p,
                 Preemption mode = Preemption::Arbitrary) {
  return Edge{std::move(id), std::move(u), std::move(v), std::move(r), std::move(d), std::move(p),
              mode};
}

// Nodes are collected from the edges (plus both terminals).
inline Instance make(std::vector<Edge> edges, Rational horizon, std::string s = "s+",
                     std::string t = "s-") {
  Instance inst;
  inst.source = s;
  inst.sink = t;
  inst.nodes = {s, t};
  for (const Edge& e : edges) {
    for (const std::string& n : {e.u, e.v}) {
      if (std::find(inst.nodes.begin(), inst.nodes.end(), n) == inst.nodes.end()) {
        inst.nodes.push_back(n);
      }
    }
  }
  inst.edges = std::move(edges);
  inst.horizon = std::move(horizon);
  return inst;
}

inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Random feasible schedule on the 1/q grid. Windows and processing times must
// be multiples of 1/q. Contiguous when the job is non-preemptable; integral
// slots only (q grid points grouped in units) when IntegralOnly.
inline Schedule random_schedule(const Instance& inst, std::mt19937_64& rng, long long q) {
  Schedule out;
  for (const Edge& e : inst.edges) {
    IntervalSet& set = out[e.id];
    const long long r = netmaint::to_int64(e.release * q);
    const long long d = netmaint::to_int64(e.deadline * q);
    const long long p = netmaint::to_int64(e.processing * q);
    if (p == 0) continue;
    if (e.preemption == Preemption::None) {
      const long long s = draw(rng, r, d - p);
      set.push_back({R(s, q), R(s + p, q)});
      continue;
    }
    const long long unit = e.preemption == Preemption::IntegralOnly ? q : 1;
    std::vector<long long> cells;
    for (long long c = r; c + unit <= d; c += unit) {
      if (c % unit == 0) cells.push_back(c);
    }
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(p / unit);
    std::sort(cells.begin(), cells.end());
    for (long long c : cells) set.push_back({R(c, q), R(c + unit, q)});
    set = netmaint::merge_union(std::move(set));
  }
  return out;
}

// Evaluator invariants every produced schedule must satisfy: feasible,
// connected + disconnected = T, and a bit-exact JSON round trip.
inline bool evaluator_consistent(const Instance& inst, const Schedule& schedule) {
  if (!netmaint::check_feasible(inst, schedule).feasible()) return false;
  const auto profile = netmaint::connectivity_profile(inst, schedule);
  if (profile.connected_time + profile.disconnected_time != inst.horizon) return false;
  const std::string text = netmaint::schedule_to_json(schedule);
  return netmaint::schedule_to_json(netmaint::schedule_from_json(text)) == text &&
         netmaint::schedule_from_json(text) == schedule;
}

}  // namespace testing

#endif  // NETMAINT_TESTS_SUPPORT_HPP_
