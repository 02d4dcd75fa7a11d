#ifndef NETMAINT_GENERATORS_HPP_
#define NETMAINT_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "netmaint/cnf.hpp"
#include "netmaint/instance.hpp"

namespace netmaint {

// Six nodes, eight unit jobs, horizon 2: two parallel routes s⁺–v2/v3–v4/v5–s⁻
// whose middle edges are fixed to alternate unit slots.
Instance gen_fig1(Preemption mode = Preemption::Arbitrary);

// Four-edge path on horizon 4 where every non-preemptive schedule blocks each
// unit slot but a preemptive one leaves [2,3] free.
Instance gen_unbounded_pop(Preemption mode = Preemption::None);

// Path with `levels` levels of jobs, level i holding i equal pieces of [0, P],
// then stretched by P at every point where one job is released and another is
// due. `scale` must be divisible by lcm(1..levels).
Instance gen_pop_lower(int levels, long long scale, Preemption mode = Preemption::None);

struct GadgetTimes {
  long long t1 = 0;
  long long t2 = 1;
  long long horizon = 2;
};

// Satisfiability gadget: connectivity is possible only in [t1,t1+1] (through
// clause nodes) and [t2,t2+1] (through variable chains); both at once iff the
// formula is satisfiable. All jobs non-preemptive.
Instance gen_3sat_gadget(const CnfFormula& formula, GadgetTimes times = {});

// n(n-1) gadget copies ("gates") on horizon n, gate (i,j) allowing variable
// paths in slot i and clause paths in slot j, linked by one access route per
// slot label. Requires n ≥ 2 variables.
Instance gen_3sat_grid(const CnfFormula& formula);

// 2n disjoint s⁺–s⁻ paths (P_i, N_i per variable) on horizon 8n with one
// 3n-long variable job per path plus unit blockers. Pads the formula with
// unused variables up to n = m and records the count under meta "padding".
Instance gen_disjoint_paths(const CnfFormula& formula);

// Path with 3n+2 edges: tight pairs mirrored around τ, one non-preemptive job
// per number and two preemptive jobs of size W = B + Σ x_i on [0,τ] and
// [τ,2τ]. Numbers must be positive with an even sum.
Instance gen_partition(const std::vector<long long>& numbers);

// Value W of the partition construction.
long long partition_w(const std::vector<long long>& numbers);

struct RandomSpec {
  std::uint64_t seed = 1;
  int nodes = 4;                 // including both terminals, ≥ 2
  double edge_density = 0.3;     // chance for each non-path node pair
  long long horizon = 8;         // windows lie in [0, horizon]
  long long max_processing = 3;
  double preemption_mix = 1.0;   // chance that a job is Arbitrary, else None
  int max_edges = 0;             // 0 = no cap; extra edges stop once the total reaches it
};

// Reproducible random instance over integer data. A spanning path s⁺, v1, …,
// s⁻ guarantees structural connectivity; extra edges follow the density.
Instance gen_random(const RandomSpec& spec);

}  // namespace netmaint

#endif  // NETMAINT_GENERATORS_HPP_
