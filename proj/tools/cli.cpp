#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netmaint/cnf.hpp"
#include "netmaint/errors.hpp"
#include "netmaint/generators.hpp"
#include "netmaint/instance_io.hpp"
#include "netmaint/json_util.hpp"
#include "netmaint/nonpreemptive_approx.hpp"
#include "netmaint/oracles.hpp"
#include "netmaint/path_solvers.hpp"
#include "netmaint/preemptive.hpp"
#include "netmaint/render.hpp"
#include "netmaint/schedule_io.hpp"

namespace netmaint::cli {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

namespace {

const std::vector<std::string> kModes = {
    "preemptive", "nonpreemptive-approx", "path-split", "path-exact",
    "mixed-2approx", "brute-np", "brute-intpmtn", "brute-mixed"};

const std::vector<std::string> kFamilies = {"fig1",           "unbounded-pop", "pop-lower",
                                            "gadget",         "grid",          "disjoint-paths",
                                            "partition",      "random"};

struct SolveSettings {
  std::string mode;
  Objective objective = Objective::MaxConnectivity;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  bool paranoia = false;
  bool parallel = false;
};

struct SolveOutcome {
  std::optional<Solution> solution;
  ordered_json details = ordered_json::object();
  bool searched = false;
  bool exceeded = false;
  std::uint64_t nodes = 0;
};

void require_all(const Instance& instance, Preemption mode, const std::string& solver) {
  for (const Edge& e : instance.edges) {
    if (e.preemption != mode) {
      throw PreconditionError(solver + " needs " + std::string(to_string(mode)) +
                              " jobs, edge " + e.id + " is " +
                              std::string(to_string(e.preemption)));
    }
  }
}

void take_search(SolveOutcome& out, SearchResult result) {
  out.searched = true;
  out.exceeded = result.budget_exceeded;
  out.nodes = result.nodes;
  out.solution = std::move(result.solution);
}

// Re-runs a grid search at half-integral resolution and records whether it
// beats the integral answer.
template <class Search>
void halfint_check(SolveOutcome& out, Objective objective, Search&& search) {
  if (!out.solution) return;
  const SearchResult fine = search(2);
  ordered_json check = ordered_json::object();
  check["nodes"] = fine.nodes;
  if (!fine.solution) {
    check["status"] = "budget exceeded";
  } else {
    const Rational& coarse = out.solution->value;
    const Rational& half = fine.solution->value;
    const bool better = objective == Objective::MaxConnectivity ? half > coarse : half < coarse;
    check["value"] = to_string(half);
    check["improves"] = better;
  }
  out.details["halfint_check"] = check;
}

SolveOutcome solve(const Instance& instance, const SolveSettings& s) {
  SolveOutcome out;
  const Execution execution = s.parallel ? Execution::Parallel : Execution::Serial;
  OracleOptions oracle;
  oracle.budget.max_nodes = s.budget;
  oracle.execution = execution;

  if (s.mode == "preemptive") {
    out.solution = solve_preemptive(instance, s.objective);
  } else if (s.mode == "nonpreemptive-approx") {
    if (s.objective != Objective::MaxConnectivity) {
      throw PreconditionError("nonpreemptive-approx only supports --objective max");
    }
    ApproxResult r = approx_max_connectivity(instance, execution);
    ordered_json cuts = ordered_json::array();
    for (const Rational& t : r.family.cuts) cuts.push_back(to_string(t));
    ordered_json scores = ordered_json::array();
    for (const Candidate& c : r.family.candidates) scores.push_back(to_string(c.score));
    out.details["cuts"] = cuts;
    out.details["scores"] = scores;
    out.details["chosen"] = r.chosen;
    out.details["reported_score"] = to_string(r.reported_score);
    out.details["latest_starts"] = r.family.cuts.size() - 2;
    out.solution = Solution{std::move(r.schedule), r.full_value};
  } else if (s.mode == "path-split") {
    require_valid(instance);
    require_path(instance);
    require_all(instance, Preemption::None, "path-split");
    const Solution relaxed = solve_preemptive(with_preemption(instance, Preemption::Arbitrary),
                                              Objective::MinDisconnectivity);
    Schedule schedule = split_nonpreemptive(instance, relaxed.schedule);
    const Rational connected = connected_time(instance, schedule);
    const long long levels = std::bit_width(instance.edges.size());
    out.details["active_time"] = to_string(relaxed.value);
    out.details["cost_bound"] = to_string(Rational(2 * levels) * relaxed.value);
    out.solution = Solution{std::move(schedule), objective_value(instance, s.objective, connected)};
  } else if (s.mode == "path-exact") {
    ExactPathOptions options;
    options.budget.max_nodes = s.budget;
    take_search(out, exact_nonpreemptive_path(instance, s.objective, options));
    if (s.paranoia) {
      halfint_check(out, s.objective, [&](int resolution) {
        ExactPathOptions fine = options;
        fine.resolution = resolution;
        return exact_nonpreemptive_path(instance, s.objective, fine);
      });
    }
  } else if (s.mode == "mixed-2approx") {
    out.solution = mixed_two_approx(instance, s.objective, SearchBudget{s.budget});
  } else if (s.mode == "brute-np") {
    take_search(out, brute_nonpreemptive(instance, s.objective, oracle));
    if (s.paranoia) {
      halfint_check(out, s.objective, [&](int resolution) {
        OracleOptions fine = oracle;
        fine.resolution = resolution;
        return brute_nonpreemptive(instance, s.objective, fine);
      });
    }
  } else if (s.mode == "brute-intpmtn") {
    take_search(out, brute_integral_preemptive(instance, s.objective, oracle));
  } else if (s.mode == "brute-mixed") {
    take_search(out, brute_mixed(instance, s.objective, oracle));
    if (s.paranoia) {
      halfint_check(out, s.objective, [&](int resolution) {
        OracleOptions fine = oracle;
        fine.resolution = resolution;
        return brute_mixed(instance, s.objective, fine);
      });
    }
  } else {
    throw std::invalid_argument("unknown mode " + s.mode);
  }
  return out;
}

ordered_json run_result(const Instance& instance, const SolveSettings& s, const SolveOutcome& o,
                        const std::string& schedule_path) {
  ordered_json r;
  r["solver"] = s.mode;
  r["parameters"] = {{"budget", s.budget}, {"paranoia_halfint", s.paranoia}};
  r["objective"] = std::string(to_string(s.objective));
  r["instance_digest"] = sha256_hex(instance_to_json(instance));
  r["value"] = o.solution ? ordered_json(to_string(o.solution->value)) : ordered_json(nullptr);
  r["schedule_path"] = schedule_path.empty() ? ordered_json(nullptr) : ordered_json(schedule_path);
  ordered_json budget;
  budget["status"] = !o.searched ? "not searched" : (o.exceeded ? "exceeded" : "complete");
  budget["nodes"] = o.nodes;
  r["budget_status"] = budget;
  r["details"] = o.details;
  r["digest"] = sha256_hex(r.dump());
  return r;
}

std::vector<long long> parse_numbers(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ValidationError("bad number '" + item + "'");
    out.push_back(value);
  }
  return out;
}

Preemption preemption_flag(const std::string& text, Preemption fallback) {
  return text.empty() ? fallback : parse_preemption(text);
}

CnfFormula load_cnf(const std::string& path) {
  if (path.empty()) throw ValidationError("this family needs --cnf FILE");
  return parse_dimacs(read_text_file(path));
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int exit_for(const std::exception& e, std::ostream& err) {
  if (dynamic_cast<const ValidationError*>(&e)) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  }
  if (dynamic_cast<const PreconditionError*>(&e)) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
  if (dynamic_cast<const BudgetExceededError*>(&e)) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
  err << "error: " << e.what() << '\n';
  return kUsage;
}

struct SolveJob {
  std::string instance_path;
  std::string schedule_out;
  std::string result_out;
};

// Solves one instance file; returns the exit code and fills `result`.
int solve_file(const SolveJob& job, const SolveSettings& s, ordered_json& result,
               std::string& message, Solution* keep = nullptr, Instance* keep_instance = nullptr) {
  try {
    const Instance instance = load_instance(job.instance_path);
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome = solve(instance, s);
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (outcome.solution && !job.schedule_out.empty()) {
      save_schedule(job.schedule_out, outcome.solution->schedule);
    }
    result = run_result(instance, s, outcome, outcome.solution ? job.schedule_out : "");
    result["wall_time_ms"] = wall;
    if (!job.result_out.empty()) write_text_file(job.result_out, result.dump(2) + "\n");
    if (keep && outcome.solution) *keep = std::move(*outcome.solution);
    if (keep_instance) *keep_instance = instance;
    if (outcome.exceeded) {
      message = "budget of " + std::to_string(s.budget) + " nodes exceeded";
      return kBudget;
    }
    return kOk;
  } catch (const std::exception& e) {
    std::ostringstream err;
    const int code = exit_for(e, err);
    message = err.str();
    if (!message.empty() && message.back() == '\n') message.pop_back();
    return code;
  }
}

void add_solve_flags(CLI::App* cmd, SolveSettings& s, std::string& objective) {
  cmd->add_option("--objective", objective, "max or min")
      ->check(CLI::IsMember({"max", "min"}))
      ->capture_default_str();
  cmd->add_option("--budget", s.budget, "node budget for exhaustive searches")
      ->capture_default_str();
  cmd->add_flag("--paranoia-halfint", s.paranoia,
                "repeat grid searches on half-integral starts and report any improvement");
  cmd->add_flag("--parallel", s.parallel, "use the OpenMP kernels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maintenance scheduling for s+/s- connectivity", "netmaint"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write an instance of a known family");
  std::string family, gen_out, cnf_path, numbers, preemption;
  int levels = 2;
  long long scale = 2;
  GadgetTimes times;
  RandomSpec spec;
  gen->add_option("family", family, "instance family")->required()->check(CLI::IsMember(kFamilies));
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");
  gen->add_option("--cnf", cnf_path, "DIMACS formula (gadget, grid, disjoint-paths)");
  gen->add_option("--numbers", numbers, "comma separated positive integers (partition)");
  gen->add_option("--preemption", preemption, "arbitrary, integral or none (fig1, unbounded-pop, pop-lower)");
  gen->add_option("--levels", levels, "pop-lower levels")->capture_default_str();
  gen->add_option("--scale", scale, "pop-lower scale P")->capture_default_str();
  gen->add_option("--t1", times.t1, "gadget t1")->capture_default_str();
  gen->add_option("--t2", times.t2, "gadget t2")->capture_default_str();
  gen->add_option("--horizon", times.horizon, "gadget horizon")->capture_default_str();
  gen->add_option("--seed", spec.seed, "random seed")->capture_default_str();
  gen->add_option("--nodes", spec.nodes, "random node count")->capture_default_str();
  gen->add_option("--density", spec.edge_density, "random extra edge density")->capture_default_str();
  gen->add_option("--max-window", spec.horizon, "random horizon")->capture_default_str();
  gen->add_option("--max-p", spec.max_processing, "random processing bound")->capture_default_str();
  gen->add_option("--mix", spec.preemption_mix, "random share of arbitrary jobs")->capture_default_str();
  gen->add_option("--max-edges", spec.max_edges, "random edge cap, 0 = none")->capture_default_str();

  // solve
  auto* sol = app.add_subcommand("solve", "solve an instance");
  SolveSettings settings;
  std::string objective = "max", instance_path, schedule_out, result_out, format = "json";
  sol->add_option("mode", settings.mode, "solver")->required()->check(CLI::IsMember(kModes));
  sol->add_option("instance", instance_path, "instance JSON")->required();
  sol->add_option("-s,--schedule-out", schedule_out, "write the schedule JSON here");
  sol->add_option("-r,--result-out", result_out, "write the run result JSON here");
  sol->add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"json", "text", "svg"}))
      ->capture_default_str();
  add_solve_flags(sol, settings, objective);

  // eval
  auto* ev = app.add_subcommand("eval", "check and evaluate a schedule");
  std::string eval_instance, eval_schedule, eval_format = "text";
  ev->add_option("instance", eval_instance, "instance JSON")->required();
  ev->add_option("schedule", eval_schedule, "schedule JSON")->required();
  ev->add_option("--format", eval_format, "json, text or svg")
      ->check(CLI::IsMember({"json", "text", "svg"}))
      ->capture_default_str();

  // batch
  auto* bat = app.add_subcommand("batch", "solve many instances, results ordered by path");
  std::vector<std::string> batch_paths;
  std::string out_dir;
  int jobs = 1;
  SolveSettings batch_settings;
  std::string batch_objective = "max";
  bat->add_option("mode", batch_settings.mode, "solver")->required()->check(CLI::IsMember(kModes));
  bat->add_option("instances", batch_paths, "instance JSON files")->required();
  bat->add_option("--out-dir", out_dir, "write <name>.schedule.json and <name>.result.json here");
  bat->add_option("--jobs", jobs, "concurrent solves")->check(CLI::PositiveNumber)->capture_default_str();
  add_solve_flags(bat, batch_settings, batch_objective);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      Instance instance;
      if (family == "fig1") {
        instance = gen_fig1(preemption_flag(preemption, Preemption::Arbitrary));
      } else if (family == "unbounded-pop") {
        instance = gen_unbounded_pop(preemption_flag(preemption, Preemption::None));
      } else if (family == "pop-lower") {
        instance = gen_pop_lower(levels, scale, preemption_flag(preemption, Preemption::None));
      } else if (family == "gadget") {
        instance = gen_3sat_gadget(load_cnf(cnf_path), times);
      } else if (family == "grid") {
        instance = gen_3sat_grid(load_cnf(cnf_path));
      } else if (family == "disjoint-paths") {
        instance = gen_disjoint_paths(load_cnf(cnf_path));
      } else if (family == "partition") {
        instance = gen_partition(parse_numbers(numbers));
      } else {
        instance = gen_random(spec);
      }
      emit(out, gen_out, instance_to_json(instance) + "\n");
      return kOk;
    }

    if (*sol) {
      settings.objective = parse_objective(objective);
      ordered_json result;
      std::string message;
      Solution solution;
      Instance instance;
      const int code = solve_file({instance_path, schedule_out, result_out}, settings, result,
                                  message, &solution, &instance);
      if (code != kOk && result.is_null()) {
        err << message << '\n';
        return code;
      }
      if (code != kOk) err << message << '\n';
      if (format == "json" || code != kOk) {
        out << result.dump(2) << '\n';
      } else {
        const ConnectivityProfile profile = connectivity_profile(instance, solution.schedule);
        out << (format == "text" ? render_gantt_text(instance, solution.schedule, profile)
                                 : render_svg(instance, solution.schedule, profile));
        if (format == "text") out << "value: " << to_string(solution.value) << '\n';
      }
      return code;
    }

    if (*ev) {
      const Instance instance = load_instance(eval_instance);
      const Schedule schedule = load_schedule(eval_schedule);
      const FeasibilityReport report = check_feasible(instance, schedule);
      if (!report.feasible()) {
        if (eval_format == "json") {
          ordered_json j;
          j["feasibility"] = feasibility_json(report);
          out << j.dump(2) << '\n';
        } else {
          out << "infeasible\n" << report.summary() << '\n';
        }
        return kValidation;
      }
      const ConnectivityProfile profile = connectivity_profile(instance, schedule);
      if (eval_format == "json") {
        ordered_json j;
        j["feasibility"] = feasibility_json(report);
        j["profile"] = profile_json(profile);
        out << j.dump(2) << '\n';
      } else if (eval_format == "svg") {
        out << render_svg(instance, schedule, profile);
      } else {
        out << "feasible\n";
        out << "connected time: " << to_string(profile.connected_time) << '\n';
        out << "disconnected time: " << to_string(profile.disconnected_time) << '\n';
        out << render_gantt_text(instance, schedule, profile);
      }
      return kOk;
    }

    // batch
    batch_settings.objective = parse_objective(batch_objective);
    std::sort(batch_paths.begin(), batch_paths.end());
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    const long long count = static_cast<long long>(batch_paths.size());
    std::vector<ordered_json> results(count);
    std::vector<std::string> messages(count);
    std::vector<int> codes(count, kOk);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long long k = 0; k < count; ++k) {
      SolveJob job{batch_paths[k], "", ""};
      if (!out_dir.empty()) {
        const std::string stem = std::filesystem::path(batch_paths[k]).stem().string();
        job.schedule_out = (std::filesystem::path(out_dir) / (stem + ".schedule.json")).string();
        job.result_out = (std::filesystem::path(out_dir) / (stem + ".result.json")).string();
      }
      codes[k] = solve_file(job, batch_settings, results[k], messages[k]);
    }
    ordered_json summary = ordered_json::array();
    int worst = kOk;
    for (long long k = 0; k < count; ++k) {
      ordered_json item;
      item["instance"] = batch_paths[k];
      item["exit"] = codes[k];
      if (!messages[k].empty()) item["message"] = messages[k];
      item["result"] = results[k];
      summary.push_back(std::move(item));
      worst = std::max(worst, codes[k]);
    }
    out << summary.dump(2) << '\n';
    return worst;
  } catch (const std::exception& e) {
    return exit_for(e, err);
  }
}

}  // namespace netmaint::cli
