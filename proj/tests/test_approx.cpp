#include "doctest.h"
#include "netmaint/errors.hpp"
#include "netmaint/generators.hpp"
#include "netmaint/nonpreemptive_approx.hpp"
#include "netmaint/oracles.hpp"
#include "support.hpp"

using namespace netmaint;
using testing::edge;
using testing::make;
using testing::R;

namespace {

Instance random_nonpreemptive(std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.nodes = 3 + static_cast<int>(seed % 2);
  spec.edge_density = 0.5;
  spec.horizon = 4 + static_cast<long long>(seed % 5);
  spec.max_processing = 3;
  spec.preemption_mix = 0.0;
  spec.max_edges = 5;
  return gen_random(spec);
}

}  // namespace

TEST_CASE("latest start points") {
  CHECK(latest_start_points(gen_fig1(Preemption::None)) == std::vector<Rational>{R(0), R(1)});
  const Instance one = make({edge("e", "s+", "s-", R(1), R(5), R(2), Preemption::None)}, R(5));
  CHECK(latest_start_points(one) == std::vector<Rational>{R(3)});
  const Instance tight = make({edge("a", "s+", "x", R(1), R(2), R(1), Preemption::None),
                               edge("b", "x", "s-", R(3), R(5), R(2), Preemption::None),
                               edge("c", "x", "s-", R(1), R(3), R(2), Preemption::None)},
                              R(5));
  CHECK(latest_start_points(tight) == std::vector<Rational>{R(1), R(3)});
}

TEST_CASE("candidate anchoring") {
  const Instance inst = make({edge("a", "s+", "x", R(0), R(4), R(1), Preemption::None),
                              edge("b", "x", "s-", R(0), R(4), R(2), Preemption::None)},
                             R(4));
  Schedule s = build_candidate(inst, R(3));
  CHECK(s.at("b") == IntervalSet{{R(0), R(2)}});
  CHECK(s.at("a") == IntervalSet{{R(3), R(4)}});
  CHECK(check_feasible(inst, s).feasible());

  s = build_candidate(inst, R(0));
  CHECK(s.at("b") == IntervalSet{{R(2), R(4)}});
  s = build_candidate(inst, R(4));
  CHECK(s.at("a") == IntervalSet{{R(0), R(1)}});
  CHECK(s.at("b") == IntervalSet{{R(0), R(2)}});
}

TEST_CASE("window scores") {
  const Instance inst = make({edge("a", "s+", "s-", R(0), R(4), R(2), Preemption::None)}, R(4));
  const Schedule s{{"a", {{R(2), R(4)}}}};
  CHECK(score_candidate(inst, s, R(0), R(2)) == 2);
  CHECK(score_candidate(inst, s, R(2), R(4)) == 0);
  CHECK(score_candidate(inst, s, R(1), R(3)) == 1);
  CHECK(score_candidate(inst, s, R(3), R(3)) == 0);
}

TEST_CASE("window score agrees with the sweep") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = random_nonpreemptive(seed);
    const CandidateFamily family = build_family(inst);
    for (const Candidate& c : family.candidates) {
      const auto profile = connectivity_profile(inst, c.schedule);
      CHECK(c.score == profile.connected_within(c.from, c.to));
      CHECK(testing::evaluator_consistent(inst, c.schedule));
    }
  }
  const Instance fig = gen_fig1(Preemption::None);
  const Schedule late = build_candidate(fig, R(0));
  CHECK(score_candidate(fig, late, R(0), R(1)) ==
        connectivity_profile(fig, late).connected_within(R(0), R(1)));
}

TEST_CASE("unbounded preemption gap path: no candidate connects") {
  const ApproxResult result = approx_max_connectivity(gen_unbounded_pop());
  CHECK(result.reported_score == 0);
  CHECK(result.full_value == 0);
  CHECK(result.chosen == 1);
}

TEST_CASE("guarantee and per-window optimality against brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = random_nonpreemptive(seed);
    const ApproxResult result = approx_max_connectivity(inst);
    const auto& cands = result.family.candidates;
    REQUIRE(cands.size() == latest_start_points(inst).size() + 1);
    const SearchResult opt = brute_nonpreemptive(inst, Objective::MaxConnectivity);
    REQUIRE(opt.solution);
    CHECK(opt.solution->value <= Rational(cands.size()) * result.reported_score);
    CHECK(result.full_value <= opt.solution->value);
    CHECK(testing::evaluator_consistent(inst, opt.solution->schedule));
    for (const Candidate& c : cands) {
      CHECK(c.score <= result.reported_score);
      if (c.from >= c.to) continue;
      OracleOptions options;
      options.window = Interval{c.from, c.to};
      const SearchResult best = brute_nonpreemptive(inst, Objective::MaxConnectivity, options);
      REQUIRE(best.solution);
      CHECK(best.solution->value == c.score);
    }
  }
}

TEST_CASE("serial and parallel families agree and runs are deterministic") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = random_nonpreemptive(seed);
    const ApproxResult a = approx_max_connectivity(inst, Execution::Serial);
    const ApproxResult b = approx_max_connectivity(inst, Execution::Parallel);
    const ApproxResult c = approx_max_connectivity(inst, Execution::Serial);
    CHECK(a.chosen == b.chosen);
    CHECK(a.schedule == b.schedule);
    CHECK(a.reported_score == b.reported_score);
    CHECK(a.family.cuts == b.family.cuts);
    CHECK(a.schedule == c.schedule);
  }
}

TEST_CASE("preemptable jobs are rejected") {
  CHECK_THROWS_AS(approx_max_connectivity(gen_fig1()), PreconditionError);
}
