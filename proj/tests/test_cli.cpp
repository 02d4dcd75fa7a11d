#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "doctest.h"
#include "netmaint/instance_io.hpp"
#include "netmaint/json_util.hpp"
#include "netmaint/schedule_io.hpp"

namespace fs = std::filesystem;
using netmaint::cli::run;
using nlohmann::json;

namespace {

struct Call {
  int code;
  std::string out;
  std::string err;
};

Call call(std::vector<std::string> args) {
  args.insert(args.begin(), "netmaint");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("netmaint_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("sha256 of a known string") {
  CHECK(netmaint::cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("generate, solve and eval round trip") {
  Scratch tmp;
  REQUIRE(call({"generate", "fig1", "-o", tmp("fig1.json")}).code == 0);
  const Call solved = call({"solve", "preemptive", tmp("fig1.json"), "-s", tmp("s.json"), "-r",
                            tmp("r.json")});
  REQUIRE(solved.code == 0);
  const json result = json::parse(solved.out);
  CHECK(result["value"] == "2");
  CHECK(result["solver"] == "preemptive");
  CHECK(result["budget_status"]["status"] == "not searched");
  CHECK(json::parse(netmaint::read_text_file(tmp("r.json")))["digest"] == result["digest"]);

  const Call evaluated = call({"eval", tmp("fig1.json"), tmp("s.json")});
  CHECK(evaluated.code == 0);
  CHECK(evaluated.out.find("connected time: 2") != std::string::npos);
  const Call as_json = call({"eval", tmp("fig1.json"), tmp("s.json"), "--format", "json"});
  CHECK(json::parse(as_json.out)["profile"]["disconnected_time"] == "0");

  const std::string saved = netmaint::read_text_file(tmp("s.json"));
  CHECK(netmaint::schedule_to_json(netmaint::schedule_from_json(saved)) + "\n" == saved);

  const Call text = call({"solve", "preemptive", tmp("fig1.json"), "--format", "text"});
  CHECK(text.out.find("value: 2") != std::string::npos);
}

TEST_CASE("digests are deterministic") {
  Scratch tmp;
  REQUIRE(call({"generate", "random", "--seed", "5", "--mix", "0", "-o", tmp("r.json")}).code == 0);
  const Call a = call({"solve", "brute-np", tmp("r.json")});
  const Call b = call({"solve", "brute-np", tmp("r.json"), "--parallel"});
  const Call c = call({"solve", "brute-np", tmp("r.json")});
  REQUIRE(a.code == 0);
  const json ja = json::parse(a.out);
  CHECK(ja["digest"] == json::parse(c.out)["digest"]);
  CHECK(ja["value"] == json::parse(b.out)["value"]);
  CHECK(ja["budget_status"]["status"] == "complete");
  CHECK(call({"generate", "random", "--seed", "5", "--mix", "0"}).out ==
        netmaint::read_text_file(tmp("r.json")));
}

TEST_CASE("integral gap through the command line") {
  Scratch tmp;
  REQUIRE(call({"generate", "fig1", "--preemption", "integral", "-o", tmp("f.json")}).code == 0);
  const Call r = call({"solve", "brute-intpmtn", tmp("f.json")});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "1");
}

TEST_CASE("approx and split details") {
  Scratch tmp;
  REQUIRE(call({"generate", "unbounded-pop", "-o", tmp("p.json")}).code == 0);
  const json approx = json::parse(call({"solve", "nonpreemptive-approx", tmp("p.json")}).out);
  CHECK(approx["value"] == "0");
  CHECK(approx["details"].contains("cuts"));
  const json split = json::parse(call({"solve", "path-split", tmp("p.json"), "--objective", "min"}).out);
  CHECK(split["details"].contains("cost_bound"));
  const json exact = json::parse(call({"solve", "path-exact", tmp("p.json"), "--objective", "min"}).out);
  CHECK(exact["value"] == "4");
}

TEST_CASE("exit codes") {
  Scratch tmp;
  REQUIRE(call({"generate", "unbounded-pop", "-o", tmp("p.json")}).code == 0);
  CHECK(call({"solve", "preemptive", tmp("p.json")}).code == netmaint::cli::kPrecondition);
  CHECK(call({"solve", "no-such-mode", tmp("p.json")}).code == netmaint::cli::kUsage);
  CHECK(call({}).code == netmaint::cli::kUsage);
  CHECK(call({"--help"}).code == netmaint::cli::kOk);

  netmaint::write_text_file(tmp("bad.json"), R"({"edges":{"e1":[["0","1/2"]]}})");
  const Call infeasible = call({"eval", tmp("p.json"), tmp("bad.json")});
  CHECK(infeasible.code == netmaint::cli::kValidation);
  CHECK(infeasible.out.find("infeasible") != std::string::npos);

  netmaint::write_text_file(tmp("broken.json"), "{not json");
  CHECK(call({"solve", "preemptive", tmp("broken.json")}).code == netmaint::cli::kValidation);
  CHECK(call({"generate", "partition", "--numbers", "1,1,1"}).code == netmaint::cli::kValidation);

  netmaint::write_text_file(tmp("f.cnf"), "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  REQUIRE(call({"generate", "gadget", "--cnf", tmp("f.cnf"), "-o", tmp("g.json")}).code == 0);
  const Call budget = call({"solve", "brute-np", tmp("g.json"), "--budget", "20"});
  CHECK(budget.code == netmaint::cli::kBudget);
  CHECK(json::parse(budget.out)["budget_status"]["status"] == "exceeded");
  CHECK(json::parse(budget.out)["value"].is_null());
}

TEST_CASE("batch orders results by path and reports the worst code") {
  Scratch tmp;
  REQUIRE(call({"generate", "fig1", "-o", tmp("b.json")}).code == 0);
  REQUIRE(call({"generate", "unbounded-pop", "-o", tmp("a.json")}).code == 0);
  const Call r = call({"batch", "preemptive", tmp("b.json"), tmp("a.json"), "--out-dir",
                       tmp("out"), "--jobs", "2"});
  CHECK(r.code == netmaint::cli::kPrecondition);
  const json summary = json::parse(r.out);
  REQUIRE(summary.size() == 2);
  CHECK(summary[0]["instance"] == tmp("a.json"));
  CHECK(summary[0]["exit"] == netmaint::cli::kPrecondition);
  CHECK(summary[1]["exit"] == 0);
  CHECK(summary[1]["result"]["value"] == "2");
  CHECK(fs::exists(tmp("out") + "/b.schedule.json"));
  CHECK(fs::exists(tmp("out") + "/b.result.json"));

  const Call ok = call({"batch", "preemptive", tmp("b.json")});
  CHECK(ok.code == 0);
}
