#include "doctest.h"
#include "netmaint/errors.hpp"
#include "netmaint/generators.hpp"
#include "netmaint/oracles.hpp"
#include "netmaint/path_solvers.hpp"
#include "netmaint/preemptive.hpp"
#include "support.hpp"

using namespace netmaint;
using testing::edge;
using testing::make;
using testing::R;

namespace {

Instance random_instance(std::uint64_t seed, Preemption mode) {
  RandomSpec spec;
  spec.seed = seed;
  spec.nodes = 3 + static_cast<int>(seed % 2);
  spec.edge_density = 0.5;
  spec.horizon = 3 + static_cast<long long>(seed % 6);
  spec.max_processing = 3;
  spec.max_edges = 5;
  return with_preemption(gen_random(spec), mode);
}

}  // namespace

TEST_CASE("integral preemption examples") {
  const Instance single = make({edge("e", "s+", "s-", R(0), R(3), R(1), Preemption::IntegralOnly)},
                               R(3));
  const SearchResult one = brute_integral_preemptive(single, Objective::MaxConnectivity);
  REQUIRE(one.solution);
  CHECK(one.solution->value == 2);

  const Instance fig = gen_fig1(Preemption::IntegralOnly);
  const SearchResult gap = brute_integral_preemptive(fig, Objective::MaxConnectivity);
  REQUIRE(gap.solution);
  CHECK(gap.solution->value == 1);
  CHECK(testing::evaluator_consistent(fig, gap.solution->schedule));

  const Instance split = make({edge("e", "s+", "s-", R(0), R(4), R(2), Preemption::IntegralOnly),
                               edge("f", "s+", "s-", R(0), R(4), R(2), Preemption::IntegralOnly)},
                              R(4));
  CHECK(brute_integral_preemptive(split, Objective::MinDisconnectivity).solution->value == 0);
}

TEST_CASE("tight jobs leave a single schedule") {
  const Instance inst = make({edge("a", "s+", "x", R(0), R(1), R(1), Preemption::None),
                              edge("b", "x", "s-", R(2), R(3), R(1), Preemption::None)},
                             R(3));
  const SearchResult r = brute_nonpreemptive(inst, Objective::MaxConnectivity);
  REQUIRE(r.solution);
  CHECK(r.solution->value == 1);
  CHECK(r.solution->schedule.at("a") == IntervalSet{{R(0), R(1)}});
  CHECK(r.solution->schedule.at("b") == IntervalSet{{R(2), R(3)}});
}

TEST_CASE("windowed objective") {
  const Instance inst = make({edge("a", "s+", "s-", R(0), R(4), R(2), Preemption::None)}, R(4));
  OracleOptions options;
  options.window = Interval{R(1), R(3)};
  CHECK(brute_nonpreemptive(inst, Objective::MaxConnectivity, options).solution->value == 1);
  CHECK(brute_nonpreemptive(inst, Objective::MinDisconnectivity, options).solution->value == 1);
  options.window = Interval{R(0), R(2)};
  CHECK(brute_nonpreemptive(inst, Objective::MaxConnectivity, options).solution->value == 2);
}

TEST_CASE("restricted starts") {
  const Instance inst = make({edge("a", "s+", "s-", R(0), R(4), R(1), Preemption::None)}, R(4));
  OracleOptions options;
  options.allowed_starts["a"] = {R(2)};
  const SearchResult r = brute_nonpreemptive(inst, Objective::MaxConnectivity, options);
  CHECK(r.solution->schedule.at("a") == IntervalSet{{R(2), R(3)}});
  options.allowed_starts["a"] = {R(9)};
  CHECK_THROWS_AS(brute_nonpreemptive(inst, Objective::MaxConnectivity, options),
                  PreconditionError);
}

TEST_CASE("non-preemptive, integral and fractional optima nest") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance base = random_instance(seed, Preemption::Arbitrary);
    const Rational lp = preemptive_optimum(base);
    const Instance integral = with_preemption(base, Preemption::IntegralOnly);
    const SearchResult ip = brute_integral_preemptive(integral, Objective::MaxConnectivity);
    const Instance non = with_preemption(base, Preemption::None);
    const SearchResult np = brute_nonpreemptive(non, Objective::MaxConnectivity);
    REQUIRE(ip.solution);
    REQUIRE(np.solution);
    CHECK(np.solution->value <= ip.solution->value);
    CHECK(ip.solution->value <= lp);
    CHECK(testing::evaluator_consistent(integral, ip.solution->schedule));
    CHECK(testing::evaluator_consistent(non, np.solution->schedule));
    const SearchResult min = brute_nonpreemptive(non, Objective::MinDisconnectivity);
    CHECK(min.solution->value == base.horizon - np.solution->value);
  }
}

TEST_CASE("general brute force agrees with the path search") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.nodes = 2 + static_cast<int>(seed % 5);
    spec.edge_density = 0.0;
    spec.horizon = 6;
    spec.preemption_mix = 0.0;
    const Instance inst = gen_random(spec);
    CHECK(brute_nonpreemptive(inst, Objective::MinDisconnectivity).solution->value ==
          exact_nonpreemptive_path(inst, Objective::MinDisconnectivity).solution->value);
  }
}

TEST_CASE("budget exhaustion is deterministic") {
  const Instance inst = gen_3sat_gadget(CnfFormula{3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, 3}}});
  OracleOptions options;
  options.budget.max_nodes = 50;
  const SearchResult a = brute_nonpreemptive(inst, Objective::MaxConnectivity, options);
  const SearchResult b = brute_nonpreemptive(inst, Objective::MaxConnectivity, options);
  CHECK(a.budget_exceeded);
  CHECK_FALSE(a.solution);
  CHECK(a.nodes == b.nodes);
  CHECK(a.nodes > 50);
}

TEST_CASE("serial and parallel searches agree") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance non = random_instance(seed, Preemption::None);
    OracleOptions serial;
    OracleOptions parallel;
    parallel.execution = Execution::Parallel;
    const SearchResult a = brute_nonpreemptive(non, Objective::MaxConnectivity, serial);
    const SearchResult b = brute_nonpreemptive(non, Objective::MaxConnectivity, parallel);
    REQUIRE(a.solution);
    REQUIRE(b.solution);
    CHECK(a.solution->value == b.solution->value);
    CHECK(a.solution->schedule == b.solution->schedule);

    const Instance ip = random_instance(seed, Preemption::IntegralOnly);
    CHECK(brute_integral_preemptive(ip, Objective::MaxConnectivity, serial).solution->value ==
          brute_integral_preemptive(ip, Objective::MaxConnectivity, parallel).solution->value);
  }
  const Instance gadget = gen_3sat_gadget(CnfFormula{3, {{1, 2, 3}, {-1, -2, 3}}});
  OracleOptions parallel;
  parallel.execution = Execution::Parallel;
  CHECK(brute_nonpreemptive(gadget, Objective::MaxConnectivity, parallel).solution->value == 2);
}

TEST_CASE("half-integral starts do not improve integral data") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance non = random_instance(seed, Preemption::None);
    OracleOptions half;
    half.resolution = 2;
    const SearchResult whole = brute_nonpreemptive(non, Objective::MaxConnectivity);
    const SearchResult fine = brute_nonpreemptive(non, Objective::MaxConnectivity, half);
    REQUIRE(fine.solution);
    CHECK(fine.solution->value == whole.solution->value);
    CHECK(testing::evaluator_consistent(non, fine.solution->schedule));
  }
}

TEST_CASE("mixed brute force") {
  RandomSpec spec;
  spec.nodes = 4;
  spec.edge_density = 0.0;
  spec.horizon = 5;
  const Instance path = gen_random(spec);
  const SearchResult all_pre = brute_mixed(path, Objective::MinDisconnectivity);
  REQUIRE(all_pre.solution);
  CHECK(all_pre.solution->value == solve_preemptive(path, Objective::MinDisconnectivity).value);

  const Instance yes = gen_partition({1, 1});
  const SearchResult r = brute_mixed(yes, Objective::MinDisconnectivity);
  REQUIRE(r.solution);
  CHECK(r.solution->value == 2 * partition_w({1, 1}));
  CHECK(testing::evaluator_consistent(yes, r.solution->schedule));
  CHECK(brute_mixed(yes, Objective::MaxConnectivity).solution->value ==
        yes.horizon - r.solution->value);

  CHECK_THROWS_AS(brute_mixed(gen_fig1(), Objective::MinDisconnectivity), PreconditionError);
  OracleOptions windowed;
  windowed.window = Interval{R(0), R(1)};
  CHECK_THROWS_AS(brute_mixed(yes, Objective::MinDisconnectivity, windowed), PreconditionError);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(brute_nonpreemptive(gen_fig1(), Objective::MaxConnectivity), PreconditionError);
  CHECK_THROWS_AS(brute_integral_preemptive(gen_fig1(Preemption::None), Objective::MaxConnectivity),
                  PreconditionError);
  const Instance fractional = make({edge("e", "s+", "s-", R("1/2"), R(3), R(1),
                                         Preemption::IntegralOnly)},
                                   R(3));
  CHECK_THROWS(brute_integral_preemptive(fractional, Objective::MaxConnectivity));
}
