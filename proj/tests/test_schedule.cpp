#include <random>
#include <string>

#include "doctest.h"
#include "netmaint/errors.hpp"
#include "netmaint/generators.hpp"
#include "netmaint/render.hpp"
#include "netmaint/schedule.hpp"
#include "netmaint/schedule_io.hpp"
#include "netmaint/slot_grid.hpp"
#include "support.hpp"

using namespace netmaint;
using testing::R;

namespace {

bool flagged(const Instance& inst, const Schedule& s, const std::string& reason) {
  for (const Violation& v : check_feasible(inst, s).violations) {
    if (v.reason == reason) return true;
  }
  return false;
}

Schedule fig1_half_schedule() {
  Schedule s;
  s["e1"] = {{R("1/2"), R(1)}, {R("3/2"), R(2)}};
  s["e2"] = {{R(0), R("1/2")}, {R(1), R("3/2")}};
  s["e3"] = {{R(1), R(2)}};
  s["e4"] = {{R(0), R(1)}};
  s["e5"] = {{R(0), R(1)}};
  s["e6"] = {{R(1), R(2)}};
  s["e7"] = {{R("1/2"), R("3/2")}};
  s["e8"] = {{R(0), R("1/2")}, {R("3/2"), R(2)}};
  return s;
}

RandomSpec spec(std::uint64_t seed, double mix) {
  RandomSpec sp;
  sp.seed = seed;
  sp.nodes = 3 + static_cast<int>(seed % 2);
  sp.edge_density = 0.5;
  sp.horizon = 6;
  sp.max_processing = 3;
  sp.preemption_mix = mix;
  sp.max_edges = 5;
  return sp;
}

}  // namespace

TEST_CASE("half-unit alternation on the two-route example connects throughout") {
  const Instance inst = gen_fig1();
  const Schedule s = fig1_half_schedule();
  REQUIRE(check_feasible(inst, s).feasible());
  const auto profile = connectivity_profile(inst, s);
  CHECK(profile.connected_time == 2);
  CHECK(profile.disconnected_time == 0);
  CHECK(slot_connected_time(inst, s, 2) == 2);
  CHECK(testing::evaluator_consistent(inst, s));
}

TEST_CASE("feasibility reasons") {
  const Instance inst = gen_fig1();
  Schedule s = fig1_half_schedule();

  CHECK(flagged(gen_fig1(Preemption::None), s, "not contiguous"));
  CHECK(flagged(gen_fig1(Preemption::IntegralOnly), s, "non-integral preemption point"));

  Schedule bad = s;
  bad["e1"] = {{R(0), R("1/2")}};
  CHECK(flagged(inst, bad, "processing time not met"));
  bad["e1"] = {{R("3/2"), R("5/2")}};
  CHECK(flagged(inst, bad, "outside window"));
  bad["e1"] = {{R(1), R(0)}};
  CHECK(flagged(inst, bad, "reversed interval"));
  bad["e1"] = {{R(0), R(1)}, {R("1/2"), R("3/2")}};
  CHECK(flagged(inst, bad, "overlapping intervals"));
  bad = s;
  bad["zz"] = {};
  CHECK(flagged(inst, bad, "unknown edge"));
  CHECK_THROWS_AS(connectivity_profile(inst, bad), ValidationError);
}

TEST_CASE("missing entries mean no maintenance") {
  const Instance inst = testing::make(
      {testing::edge("e", "s+", "s-", R(0), R(3), R(0))}, R(3));
  CHECK(connected_time(inst, Schedule{}) == 3);
  const Instance busy = testing::make(
      {testing::edge("e", "s+", "s-", R(0), R(3), R(1))}, R(3));
  CHECK_FALSE(check_feasible(busy, Schedule{}).feasible());
}

TEST_CASE("sweep agrees with the slot grid on random schedules") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = gen_random(spec(seed, 1.0));
    std::mt19937_64 rng(seed);
    for (long long q : {1, 2, 3, 4}) {
      const Schedule s = testing::random_schedule(inst, rng, q);
      REQUIRE(check_feasible(inst, s).feasible());
      const auto profile = connectivity_profile(inst, s);
      CHECK(profile.connected_time == slot_connected_time(inst, s, static_cast<int>(q)));
      CHECK(profile.connected_time + profile.disconnected_time == inst.horizon);
      CHECK(testing::evaluator_consistent(inst, s));
    }
  }
}

TEST_CASE("removing maintenance never loses connectivity") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Instance inst = gen_random(spec(seed, 1.0));
    std::mt19937_64 rng(seed);
    const Schedule s = testing::random_schedule(inst, rng, 2);
    const Rational full = connectivity_profile_unchecked(inst, s).connected_time;
    for (const auto& [id, set] : s) {
      for (std::size_t k = 0; k < set.size(); ++k) {
        Schedule less = s;
        less[id].erase(less[id].begin() + static_cast<long>(k));
        CHECK(connectivity_profile_unchecked(inst, less).connected_time >= full);
      }
    }
  }
}

TEST_CASE("splitting an interval keeps the value") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const Instance inst = gen_random(spec(seed, 1.0));
    std::mt19937_64 rng(seed);
    const Schedule s = testing::random_schedule(inst, rng, 1);
    const Rational before = connected_time(inst, s);
    for (const auto& [id, set] : s) {
      if (set.empty()) continue;
      Schedule split = s;
      const Interval whole = split[id].front();
      const Rational mid = (whole.start + whole.end) / 2;
      split[id].front() = {whole.start, mid};
      split[id].insert(split[id].begin() + 1, {mid, whole.end});
      CHECK(connectivity_profile_unchecked(inst, split).connected_time == before);
    }
  }
}

TEST_CASE("connected_within over a window") {
  const Instance inst = gen_fig1();
  Schedule s = fig1_half_schedule();
  s["e1"] = {{R(0), R(1)}};
  s["e2"] = {{R(0), R(1)}};
  s["e7"] = {{R(1), R(2)}};
  s["e8"] = {{R(1), R(2)}};
  const auto profile = connectivity_profile(inst, s);
  CHECK(profile.connected_time == 0);
  CHECK(profile.connected_within(R(0), R(2)) == 0);

  const Instance single = testing::make(
      {testing::edge("e", "s+", "s-", R(0), R(4), R(1))}, R(4));
  const auto p = connectivity_profile(single, {{"e", {{R(1), R(2)}}}});
  CHECK(p.connected_within(R(0), R("3/2")) == 1);
  CHECK(p.connected_within(R("3/2"), R(4)) == 2);
}

TEST_CASE("schedule JSON round trip is bit exact") {
  const Schedule s = fig1_half_schedule();
  const std::string text = schedule_to_json(s);
  CHECK(schedule_to_json(schedule_from_json(text)) == text);
  CHECK(schedule_from_json(text) == s);
  CHECK_THROWS_AS(schedule_from_json(R"({"edges":{"e1":[["0"]]}})"), ValidationError);
  CHECK_THROWS_AS(schedule_from_json(R"({"edges":{"e1":[[0.5,1]]}})"), ValidationError);
}

TEST_CASE("overlay and rendering") {
  const Schedule a{{"e1", {{R(0), R(1)}}}};
  const Schedule b{{"e2", {{R(1), R(2)}}}};
  const Schedule both = overlay(a, b);
  CHECK(both.size() == 2);
  const Instance inst = gen_fig1();
  const Schedule s = fig1_half_schedule();
  const auto profile = connectivity_profile(inst, s);
  const std::string chart = render_gantt_text(inst, s, profile);
  CHECK(chart.find("e8") != std::string::npos);
  CHECK(render_svg(inst, s, profile).rfind("<svg", 0) == 0);
}
