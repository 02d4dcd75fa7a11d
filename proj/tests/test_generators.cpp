#include <set>

#include "doctest.h"
#include "netmaint/cnf.hpp"
#include "netmaint/errors.hpp"
#include "netmaint/generators.hpp"
#include "netmaint/instance_io.hpp"
#include "netmaint/oracles.hpp"
#include "netmaint/path_solvers.hpp"
#include "support.hpp"

using namespace netmaint;
using testing::R;

namespace {

CnfFormula cnf(int n, std::vector<Clause> clauses) { return CnfFormula{n, std::move(clauses)}; }

CnfFormula all_sign_patterns() {
  CnfFormula f{3, {}};
  for (int mask = 0; mask < 8; ++mask) {
    f.clauses.push_back({mask & 1 ? -1 : 1, mask & 2 ? -2 : 2, mask & 4 ? -3 : 3});
  }
  return f;
}

std::size_t count_prefix(const Instance& inst, const std::string& prefix) {
  std::size_t k = 0;
  for (const Edge& e : inst.edges) k += e.id.rfind(prefix, 0) == 0;
  return k;
}

}  // namespace

TEST_CASE("DIMACS parsing and satisfiability") {
  const CnfFormula f = parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
  CHECK(f.variables == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1] == Clause{-1, 2, -3});
  CHECK(parse_dimacs(to_dimacs(f)).clauses == f.clauses);
  CHECK(brute_satisfiable(f));
  CHECK_FALSE(brute_satisfiable(all_sign_patterns()));
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), ValidationError);
  CHECK_THROWS_AS(validate_formula(cnf(3, {{1, 1, 2}})), ValidationError);
  CHECK_THROWS_AS(validate_formula(cnf(3, {{1, 2, 4}})), ValidationError);
}

TEST_CASE("two-route example structure") {
  const Instance inst = gen_fig1();
  CHECK(inst.nodes.size() == 6);
  CHECK(inst.edges.size() == 8);
  CHECK(inst.horizon == 2);
  CHECK(relevant_time_points(inst) == std::vector<Rational>{R(0), R(1), R(2)});
  CHECK(validate(inst).valid());
  CHECK(gen_fig1(Preemption::IntegralOnly).edges[3].preemption == Preemption::IntegralOnly);
}

TEST_CASE("unbounded preemption gap structure") {
  const Instance inst = gen_unbounded_pop();
  CHECK(inst.nodes.size() == 5);
  CHECK(inst.edges.size() == 4);
  CHECK(is_path_instance(inst));
  for (const Edge& e : inst.edges) CHECK(e.preemption == Preemption::None);
}

TEST_CASE("stretched lower-bound family structure") {
  for (int levels = 1; levels <= 4; ++levels) {
    const Instance inst = gen_pop_lower(levels, 12, Preemption::None);
    CHECK(inst.edges.size() == static_cast<std::size_t>(levels * (levels + 1) / 2));
    CHECK(is_path_instance(inst));
    CHECK(validate(inst).valid());
    for (const Edge& e : inst.edges) CHECK(e.processing * (e.id[1] - '0') == 12);
  }
  CHECK_THROWS_AS(gen_pop_lower(3, 4), ValidationError);
  CHECK_THROWS_AS(gen_pop_lower(0, 4), ValidationError);
}

TEST_CASE("satisfiability gadget structure") {
  const Instance inst = gen_3sat_gadget(cnf(3, {{1, 2, 3}}));
  CHECK(inst.nodes.size() == 17);
  CHECK(inst.edges.size() == 25);
  CHECK(inst.horizon == 2);
  for (const Edge& e : inst.edges) CHECK(e.preemption == Preemption::None);

  const Instance mixed = gen_3sat_gadget(cnf(3, {{1, -2, 3}, {-1, 2, 3}}));
  // 3 blocking, s'-v1, v4-s-: x1, x2 chains of 3 edges each side, x3 positive
  // chain of 5 plus bypass; clause hops 2 per literal plus s'-c1 and c3-s-.
  CHECK(mixed.edges.size() == 3 + 1 + 1 + 6 + 6 + 6 + 2 * 6 + 2);

  CHECK_THROWS_AS(gen_3sat_gadget(cnf(3, {{1, 2, 3}}), GadgetTimes{1, 1, 3}), ValidationError);
  const Instance shifted = gen_3sat_gadget(cnf(3, {{1, 2, 3}}), GadgetTimes{1, 3, 5});
  CHECK(shifted.horizon == 5);
  CHECK(validate(shifted).valid());
}

TEST_CASE("satisfiability gadget values") {
  const SearchResult sat = brute_nonpreemptive(gen_3sat_gadget(cnf(3, {{1, 2, 3}})),
                                               Objective::MaxConnectivity);
  REQUIRE(sat.solution);
  CHECK(sat.solution->value == 2);
  const Instance unsat_inst = gen_3sat_gadget(all_sign_patterns());
  const SearchResult unsat = brute_nonpreemptive(unsat_inst, Objective::MaxConnectivity);
  REQUIRE(unsat.solution);
  CHECK(unsat.solution->value == 1);
  CHECK(testing::evaluator_consistent(unsat_inst, unsat.solution->schedule));
}

TEST_CASE("grid structure for two variables") {
  const Instance inst = gen_3sat_grid(cnf(2, {}));
  // Two gates of 9 nodes and 9 edges each, two access routes of 3 hops.
  CHECK(inst.nodes.size() == 2 + 18 + 6);
  CHECK(inst.edges.size() == 18 + 12);
  CHECK(inst.horizon == 2);
  CHECK(inst.metadata.at("gates") == "2");
  CHECK(validate(inst).valid());
  const SearchResult best = brute_nonpreemptive(inst, Objective::MaxConnectivity);
  REQUIRE(best.solution);
  CHECK(best.solution->value == 2);
  CHECK_THROWS_AS(gen_3sat_grid(cnf(1, {})), ValidationError);
}

TEST_CASE("grid gate count grows as n(n-1)") {
  const Instance inst = gen_3sat_grid(cnf(3, {{1, -2, 3}}));
  CHECK(inst.metadata.at("gates") == "6");
  std::set<std::string> gates;
  for (const std::string& node : inst.nodes) {
    if (node[0] == 'g') gates.insert(node.substr(0, node.find('/')));
  }
  CHECK(gates.size() == 6);
  CHECK(validate(inst).valid());
}

TEST_CASE("disjoint paths structure") {
  const Instance inst = gen_disjoint_paths(cnf(3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, 3}}));
  CHECK(inst.horizon == 24);
  CHECK(inst.metadata.at("padding") == "0");
  // 2n variable jobs; t and u blockers n(2n-1) each, w blockers n(2n-2),
  // clause blockers m(2n-3).
  CHECK(inst.edges.size() == 6 + 15 + 15 + 12 + 9);
  CHECK(inst.nodes.size() == 2 + inst.edges.size() - 6);
  CHECK(count_prefix(inst, "P1.") == 1 + 2 + 3 + 2 + 1);
  CHECK(count_prefix(inst, "N1.") == 1 + 3 + 2 + 2 + 2);
  const Edge* var = inst.find_edge("P2.var");
  REQUIRE(var);
  CHECK(var->processing == 9);
  CHECK(var->deadline == 24);

  const Instance padded = gen_disjoint_paths(cnf(3, {{1, 2, 3}, {-1, 2, -3}, {1, -2, 3}, {1, 2, -3}}));
  CHECK(padded.metadata.at("padding") == "1");
  CHECK(padded.horizon == 32);
}

TEST_CASE("partition structure") {
  const Instance inst = gen_partition({1, 1});
  CHECK(partition_w({1, 1}) == 6);
  CHECK(partition_w({1, 3}) == 12);
  CHECK(partition_w({2, 2}) == 12);
  CHECK(partition_w({1, 1, 2}) == 44);
  CHECK(inst.edges.size() == 8);
  CHECK(inst.horizon == 24);
  CHECK(inst.metadata.at("tau") == "12");
  CHECK(is_path_instance(inst));
  CHECK(inst.find_edge("J3.1")->preemption == Preemption::Arbitrary);
  CHECK(inst.find_edge("J2.1")->processing == 5);
  CHECK(inst.find_edge("J1.1")->tight());
  CHECK_THROWS_AS(gen_partition({1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(gen_partition({0, 2}), ValidationError);
}

TEST_CASE("random instances are valid and reproducible") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.nodes = 2 + static_cast<int>(seed % 6);
    spec.edge_density = 0.4;
    spec.horizon = 1 + static_cast<long long>(seed % 8);
    spec.preemption_mix = 0.5;
    spec.max_edges = 5;
    const Instance inst = gen_random(spec);
    CHECK(validate(inst).valid());
    CHECK(inst.edges.size() <= std::max<std::size_t>(5, spec.nodes - 1));
    CHECK(inst.horizon == spec.horizon);
    CHECK(has_integral_data(inst));
    CHECK(instance_to_json(gen_random(spec)) == instance_to_json(inst));
  }
  RandomSpec a;
  RandomSpec b;
  b.seed = 2;
  CHECK(instance_to_json(gen_random(a)) != instance_to_json(gen_random(b)));
  a.preemption_mix = 0.0;
  for (const Edge& e : gen_random(a).edges) CHECK(e.preemption == Preemption::None);
  a.nodes = 1;
  CHECK_THROWS_AS(gen_random(a), ValidationError);
}
