#include "netmaint/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "netmaint/errors.hpp"

namespace netmaint {

namespace {

class Builder {
 public:
  Builder(std::string source, std::string sink) {
    instance_.source = source;
    instance_.sink = sink;
    node(source);
    node(sink);
  }

  void node(const std::string& name) {
    if (seen_.insert(name).second) instance_.nodes.push_back(name);
  }

  void edge(const std::string& u, const std::string& v, Rational release, Rational deadline,
            Rational processing, Preemption mode, std::string id = "") {
    node(u);
    node(v);
    Edge e;
    e.id = id.empty() ? u + "-" + v : std::move(id);
    e.u = u;
    e.v = v;
    e.release = std::move(release);
    e.deadline = std::move(deadline);
    e.processing = std::move(processing);
    e.preemption = mode;
    instance_.edges.push_back(std::move(e));
  }

  void tight(const std::string& u, const std::string& v, const Rational& from, const Rational& to,
             Preemption mode, std::string id = "") {
    edge(u, v, from, to, to - from, mode, std::move(id));
  }

  Instance finish(Rational horizon) {
    instance_.horizon = std::move(horizon);
    return std::move(instance_);
  }

  Instance& instance() { return instance_; }

 private:
  Instance instance_;
  std::unordered_set<std::string> seen_;
};

// Windows of the three gadget edge types.
struct GadgetShape {
  Rational e1_release, e1_deadline, e1_processing;  // choice edge
  Rational e2_slot;                                 // blocked on variable chains
  Rational e3_slot;                                 // blocked on clause hops
  std::vector<std::pair<Rational, Rational>> blocking;  // three tight windows
};

void add_gadget(Builder& b, const std::string& prefix, const std::string& s_plus,
                const std::string& s_minus, const CnfFormula& formula, const GadgetShape& shape) {
  const Preemption np = Preemption::None;
  auto name = [&](const std::string& local) { return prefix + local; };
  auto type1 = [&](const std::string& u, const std::string& v) {
    b.edge(u, v, shape.e1_release, shape.e1_deadline, shape.e1_processing, np);
  };
  auto type2 = [&](const std::string& u, const std::string& v) {
    b.tight(u, v, shape.e2_slot, shape.e2_slot + 1, np);
  };
  auto type3 = [&](const std::string& u, const std::string& v) {
    b.tight(u, v, shape.e3_slot, shape.e3_slot + 1, np);
  };

  const std::string s_prime = name("s'");
  const std::string p1 = name("p1");
  const std::string p2 = name("p2");
  b.tight(s_plus, p1, shape.blocking[0].first, shape.blocking[0].second, np);
  b.tight(p1, p2, shape.blocking[1].first, shape.blocking[1].second, np);
  b.tight(p2, s_prime, shape.blocking[2].first, shape.blocking[2].second, np);

  const int n = formula.variables;
  const int m = static_cast<int>(formula.clauses.size());
  std::vector<int> positive(n + 1, 0);
  std::vector<int> negative(n + 1, 0);
  for (const Clause& c : formula.clauses) {
    for (int lit : c) (lit > 0 ? positive : negative)[std::abs(lit)]++;
  }
  auto v = [&](int i) { return name("v" + std::to_string(i)); };
  auto y = [&](int i, int q) { return name("y" + std::to_string(i) + "_" + std::to_string(q)); };
  auto z = [&](int i, int q) { return name("z" + std::to_string(i) + "_" + std::to_string(q)); };
  auto c = [&](int r) { return name("c" + std::to_string(r)); };

  type2(s_prime, v(1));
  for (int i = 1; i <= n; ++i) {
    for (int side = 0; side < 2; ++side) {
      const int length = 2 * (side == 0 ? positive[i] : negative[i]);
      if (length == 0) continue;
      auto chain = [&](int q) { return side == 0 ? y(i, q) : z(i, q); };
      type2(v(i), chain(1));
      for (int q = 1; q < length; ++q) {
        if (q % 2 == 1) {
          type1(chain(q), chain(q + 1));
        } else {
          type2(chain(q), chain(q + 1));
        }
      }
      type2(chain(length), v(i + 1));
    }
    if (positive[i] == 0 || negative[i] == 0) type2(v(i), v(i + 1));
  }
  type2(v(n + 1), s_minus);

  std::vector<int> seen_pos(n + 1, 0);
  std::vector<int> seen_neg(n + 1, 0);
  type3(s_prime, c(1));
  for (int r = 1; r <= m; ++r) {
    for (int lit : formula.clauses[r - 1]) {
      const int i = std::abs(lit);
      const int q = ++(lit > 0 ? seen_pos : seen_neg)[i];
      const std::string first = lit > 0 ? y(i, 2 * q - 1) : z(i, 2 * q - 1);
      const std::string second = lit > 0 ? y(i, 2 * q) : z(i, 2 * q);
      type3(c(r), first);
      type3(second, c(r + 1));
    }
  }
  type3(c(m + 1), s_minus);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  // Uniform in [0, bound) by rejection; independent of the library's
  // distribution implementations.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool chance(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

}  // namespace

Instance gen_fig1(Preemption mode) {
  Builder b("s+", "s-");
  for (const char* n : {"v2", "v3", "v4", "v5"}) b.node(n);
  b.edge("s+", "v2", 0, 2, 1, mode, "e1");
  b.edge("s+", "v3", 0, 2, 1, mode, "e2");
  b.edge("v2", "v4", 1, 2, 1, mode, "e3");
  b.edge("v2", "v5", 0, 1, 1, mode, "e4");
  b.edge("v3", "v4", 0, 1, 1, mode, "e5");
  b.edge("v3", "v5", 1, 2, 1, mode, "e6");
  b.edge("v4", "s-", 0, 2, 1, mode, "e7");
  b.edge("v5", "s-", 0, 2, 1, mode, "e8");
  return b.finish(2);
}

Instance gen_unbounded_pop(Preemption mode) {
  Builder b("s+", "s-");
  for (const char* n : {"u", "w", "v"}) b.node(n);
  b.edge("s+", "u", 0, 1, 1, mode, "e1");
  b.edge("u", "w", 0, 3, 2, mode, "e2");
  b.edge("w", "v", 1, 4, 2, mode, "e3");
  b.edge("v", "s-", 3, 4, 1, mode, "e4");
  return b.finish(4);
}

Instance gen_pop_lower(int levels, long long scale, Preemption mode) {
  if (levels < 1) throw ValidationError("levels must be positive");
  if (scale < 1) throw ValidationError("scale must be positive");
  long long lcm = 1;
  for (int i = 1; i <= levels; ++i) lcm = std::lcm(lcm, static_cast<long long>(i));
  if (scale % lcm != 0) {
    throw ValidationError("scale " + std::to_string(scale) + " is not divisible by lcm(1.." +
                          std::to_string(levels) + ") = " + std::to_string(lcm));
  }
  struct Job {
    int level, index;
    long long r, d, p;
  };
  std::vector<Job> jobs;
  std::set<long long> releases, deadlines;
  for (int i = 1; i <= levels; ++i) {
    for (int j = 1; j <= i; ++j) {
      const long long r = (j - 1) * scale / i;
      const long long d = j * scale / i;
      jobs.push_back({i, j, r, d, scale / i});
      releases.insert(r);
      deadlines.insert(d);
    }
  }
  std::vector<long long> stretch;
  for (long long t : releases) {
    if (deadlines.count(t)) stretch.push_back(t);
  }
  auto shift_release = [&](long long t) {
    return t + scale * static_cast<long long>(
                           std::upper_bound(stretch.begin(), stretch.end(), t) - stretch.begin());
  };
  auto shift_deadline = [&](long long t) {
    return t + scale * static_cast<long long>(
                           std::lower_bound(stretch.begin(), stretch.end(), t) - stretch.begin());
  };

  Builder b("s+", "s-");
  std::string prev = "s+";
  long long horizon = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const Job& job = jobs[k];
    const std::string next = k + 1 == jobs.size() ? "s-" : "n" + std::to_string(k + 1);
    const long long d = shift_deadline(job.d);
    b.edge(prev, next, shift_release(job.r), d, job.p, mode,
           "L" + std::to_string(job.level) + "." + std::to_string(job.index));
    horizon = std::max(horizon, d);
    prev = next;
  }
  Instance out = b.finish(horizon);
  out.metadata["levels"] = std::to_string(levels);
  out.metadata["scale"] = std::to_string(scale);
  return out;
}

Instance gen_3sat_gadget(const CnfFormula& formula, GadgetTimes times) {
  validate_formula(formula);
  if (times.t1 < 0 || times.t1 + 1 > times.t2 || times.horizon < times.t2 + 1) {
    throw ValidationError("gadget times need 0 ≤ t1, t1+1 ≤ t2 and t2+1 ≤ T");
  }
  GadgetShape shape;
  shape.e1_release = times.t1;
  shape.e1_deadline = times.t2 + 1;
  shape.e1_processing = times.t2 - times.t1;
  shape.e2_slot = times.t1;
  shape.e3_slot = times.t2;
  shape.blocking = {{0, times.t1}, {times.t1 + 1, times.t2}, {times.t2 + 1, times.horizon}};
  Builder b("s+", "s-");
  add_gadget(b, "", "s+", "s-", formula, shape);
  Instance out = b.finish(times.horizon);
  out.metadata["variables"] = std::to_string(formula.variables);
  out.metadata["clauses"] = std::to_string(formula.clauses.size());
  return out;
}

Instance gen_3sat_grid(const CnfFormula& formula) {
  validate_formula(formula);
  const int n = formula.variables;
  if (n < 2) throw ValidationError("grid needs at least two variables (n(n-1) gates)");
  Builder b("s+", "s-");
  auto gate = [](int i, int j) { return "g" + std::to_string(i) + "." + std::to_string(j) + "/"; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      GadgetShape shape;
      shape.e1_release = lo;
      shape.e1_deadline = hi + 1;
      shape.e1_processing = hi - lo;
      shape.e2_slot = j;
      shape.e3_slot = i;
      shape.blocking = {{0, lo}, {lo + 1, hi}, {hi + 1, n}};
      add_gadget(b, gate(i, j), gate(i, j) + "s+", gate(i, j) + "s-", formula, shape);
    }
  }
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> route;
    for (int j = 0; j < k; ++j) route.push_back(gate(j, k));
    for (int j = 0; j < n; ++j) {
      if (j != k) route.push_back(gate(k, j));
    }
    for (int j = k + 1; j < n; ++j) route.push_back(gate(j, k));
    std::string from = "s+";
    for (std::size_t step = 0; step <= route.size(); ++step) {
      const std::string to = step == route.size() ? "s-" : route[step] + "s+";
      const std::string mid = "a" + std::to_string(k) + "." + std::to_string(step);
      b.tight(from, mid, 0, k, Preemption::None);
      b.tight(mid, to, k + 1, n, Preemption::None);
      if (step < route.size()) from = route[step] + "s-";
    }
  }
  Instance out = b.finish(n);
  out.metadata["variables"] = std::to_string(n);
  out.metadata["clauses"] = std::to_string(formula.clauses.size());
  out.metadata["gates"] = std::to_string(n * (n - 1));
  return out;
}

Instance gen_disjoint_paths(const CnfFormula& formula) {
  validate_formula(formula);
  const int m = static_cast<int>(formula.clauses.size());
  const int n = std::max(formula.variables, m);
  if (n < 1) throw ValidationError("formula has no variables");
  const long long T = 8LL * n;

  struct Blocker {
    long long at;
    std::string tag;
  };
  // Paths are indexed 2(i-1) for P_i and 2(i-1)+1 for N_i.
  std::vector<std::vector<Blocker>> blockers(2 * n);
  auto add_except = [&](long long at, const std::string& tag, std::vector<int> skip) {
    for (int path = 0; path < 2 * n; ++path) {
      if (std::find(skip.begin(), skip.end(), path) == skip.end()) {
        blockers[path].push_back({at, tag});
      }
    }
  };
  for (int i = 1; i <= n; ++i) {
    const long long t = 3LL * n + 2LL * (i - 1);
    add_except(t, "t" + std::to_string(i), {2 * (i - 1)});
    add_except(t + 1, "u" + std::to_string(i), {2 * (i - 1) + 1});
    add_except(2LL * n + (i - 1), "w" + std::to_string(i), {2 * (i - 1), 2 * (i - 1) + 1});
  }
  for (int j = 1; j <= m; ++j) {
    std::vector<int> skip;
    for (int lit : formula.clauses[j - 1]) skip.push_back(2 * (std::abs(lit) - 1) + (lit < 0));
    add_except(5LL * n + j, "c" + std::to_string(j), skip);
  }

  Builder b("s+", "s-");
  for (int path = 0; path < 2 * n; ++path) {
    const std::string label = (path % 2 == 0 ? "P" : "N") + std::to_string(path / 2 + 1);
    std::vector<Blocker>& list = blockers[path];
    std::stable_sort(list.begin(), list.end(),
                     [](const Blocker& a, const Blocker& c) { return a.at < c.at; });
    std::string prev = "s+";
    const std::size_t count = list.size() + 1;
    for (std::size_t k = 0; k < count; ++k) {
      const std::string next = k + 1 == count ? "s-" : label + "." + std::to_string(k + 1);
      if (k == 0) {
        b.edge(prev, next, 0, T, 3LL * n, Preemption::None, label + ".var");
      } else {
        const Blocker& blk = list[k - 1];
        b.tight(prev, next, blk.at, blk.at + 1, Preemption::None, label + "." + blk.tag);
      }
      prev = next;
    }
  }
  Instance out = b.finish(T);
  out.metadata["variables"] = std::to_string(n);
  out.metadata["clauses"] = std::to_string(m);
  out.metadata["padding"] = std::to_string(n - formula.variables);
  return out;
}

namespace {

struct PartitionData {
  Integer half;
  std::vector<Integer> x;
  std::vector<Integer> release;   // r_i of the left tight job i
  std::vector<Integer> deadline;  // deadline of the mirrored tight job for a_i
  Integer tau;
  Integer w;
};

PartitionData partition_data(const std::vector<long long>& numbers) {
  if (numbers.empty()) throw ValidationError("partition needs at least one number");
  Integer sum = 0;
  for (long long a : numbers) {
    if (a <= 0) throw ValidationError("partition numbers must be positive");
    sum += a;
  }
  if (sum % 2 != 0) throw ValidationError("partition numbers must have an even sum");
  PartitionData data;
  const std::size_t n = numbers.size();
  data.half = sum / 2;
  Integer power = 1;
  data.x.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    data.x[i] = power * data.half;
    power *= 4;
  }
  Integer prefix = 0;
  for (std::size_t i = 0; i < n; ++i) {
    data.release.push_back(prefix);
    prefix += 2 * data.x[i] + numbers[i];
  }
  data.tau = prefix;
  data.deadline.assign(n, 0);
  Integer suffix = 0;
  for (std::size_t i = n; i-- > 0;) {
    suffix += 2 * data.x[i] + numbers[i];
    data.deadline[i] = data.tau + suffix;
  }
  data.w = data.half;
  for (const Integer& xi : data.x) data.w += xi;
  return data;
}

}  // namespace

long long partition_w(const std::vector<long long>& numbers) {
  return partition_data(numbers).w.convert_to<long long>();
}

Instance gen_partition(const std::vector<long long>& numbers) {
  const PartitionData data = partition_data(numbers);
  const std::size_t n = numbers.size();
  Builder b("s+", "s-");
  std::size_t next_node = 1;
  std::string prev = "s+";
  const std::size_t total = 3 * n + 2;
  auto hop = [&]() {
    const std::string next = next_node == total ? "s-" : "n" + std::to_string(next_node);
    ++next_node;
    std::string from = prev;
    prev = next;
    return std::make_pair(from, next);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, v] = hop();
    b.tight(u, v, Rational(data.release[i]), Rational(data.release[i] + data.x[i]),
            Preemption::None, "J1." + std::to_string(i + 1));
  }
  for (std::size_t j = n + 1; j <= 2 * n; ++j) {
    const std::size_t i = 2 * n - j;  // 0-based number index
    const auto [u, v] = hop();
    b.tight(u, v, Rational(data.deadline[i] - data.x[i]), Rational(data.deadline[i]),
            Preemption::None, "J1." + std::to_string(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, v] = hop();
    b.edge(u, v, Rational(data.release[i]), Rational(data.deadline[i]),
           Rational(data.x[i] + numbers[i]), Preemption::None, "J2." + std::to_string(i + 1));
  }
  {
    const auto [u, v] = hop();
    b.edge(u, v, 0, Rational(data.tau), Rational(data.w), Preemption::Arbitrary, "J3.1");
  }
  {
    const auto [u, v] = hop();
    b.edge(u, v, Rational(data.tau), Rational(2 * data.tau), Rational(data.w),
           Preemption::Arbitrary, "J3.2");
  }
  Instance out = b.finish(Rational(2 * data.tau));
  out.metadata["B"] = data.half.str();
  out.metadata["W"] = data.w.str();
  out.metadata["tau"] = data.tau.str();
  return out;
}

Instance gen_random(const RandomSpec& spec) {
  if (spec.nodes < 2) throw ValidationError("random instance needs at least two nodes");
  if (spec.horizon < 1) throw ValidationError("random instance needs a positive horizon");
  if (spec.max_processing < 0) throw ValidationError("negative processing bound");
  std::mt19937_64 rng(spec.seed);

  std::vector<std::string> order{"s+"};
  for (int k = 1; k + 1 < spec.nodes; ++k) order.push_back("v" + std::to_string(k));
  order.push_back("s-");

  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k + 1 < spec.nodes; ++k) pairs.emplace_back(k, k + 1);
  std::vector<std::pair<int, int>> extra;
  for (int a = 0; a < spec.nodes; ++a) {
    for (int c = a + 2; c < spec.nodes; ++c) {
      if (chance(rng, spec.edge_density)) extra.emplace_back(a, c);
    }
  }
  for (const auto& pr : extra) {
    if (spec.max_edges > 0 && static_cast<int>(pairs.size()) >= spec.max_edges) break;
    pairs.push_back(pr);
  }

  Builder b("s+", "s-");
  for (const std::string& name : order) b.node(name);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const long long r = uniform(rng, 0, spec.horizon - 1);
    const long long d = uniform(rng, r + 1, spec.horizon);
    const long long p = uniform(rng, 0, std::min(spec.max_processing, d - r));
    const Preemption mode =
        chance(rng, spec.preemption_mix) ? Preemption::Arbitrary : Preemption::None;
    b.edge(order[pairs[k].first], order[pairs[k].second], r, d, p, mode,
           "e" + std::to_string(k + 1));
  }
  Instance out = b.finish(spec.horizon);
  out.metadata["seed"] = std::to_string(spec.seed);
  return out;
}

}  // namespace netmaint
