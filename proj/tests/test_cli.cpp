#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the cdc executable with stderr folded into stdout.
Run cdc(const std::string& args) {
  const std::string cmd = std::string(CDC_EXE) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cdc_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(cdc("").code == 2);
  CHECK(cdc("search").code == 2);
  CHECK(cdc("frobnicate --graph k33").code == 2);
  CHECK(cdc("export-dot --graph k33 --layer xyz").code == 2);
  CHECK(cdc("--help").code == 0);
}

TEST_CASE("precondition and input failures exit 1 with a JSON error") {
  const Run missing = cdc("info --graph no_such_graph");
  CHECK(missing.code == 1);
  CHECK(nlohmann::json::parse(missing.out)["error"] == "input");
  const std::string k4 = temp_path("k4.edges");
  std::ofstream(k4) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  const Run r = cdc("search --graph " + k4);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"] == "precondition");
  CHECK(j["message"].get<std::string>().find("triangle-free") != std::string::npos);
}

TEST_CASE("search emits a valid certificate, deterministically") {
  const Run a = cdc("search --graph petersen --seed 7");
  REQUIRE(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["verdict"] == "valid_cdc");
  CHECK(j["seed"] == 7);
  const Run b = cdc("search --graph named:petersen --seed 7");
  CHECK(a.out == b.out);
  const Run threaded = cdc("search --graph petersen --seed 7 --threads 4");
  CHECK(a.out == threaded.out);

  const std::string trace = temp_path("trace.jsonl");
  REQUIRE(cdc("search --graph heawood --seed 3 --trace " + trace).code == 0);
  std::ifstream in(trace);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto t = nlohmann::json::parse(line);
    CHECK(t.contains("type_a"));
    ++lines;
  }
  CHECK(lines >= 2);
}

TEST_CASE("search on a bridged graph fails with exit 1") {
  const Run r = cdc("search --graph bridged_gadget --max-restarts 2");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "invalid");
  CHECK(j["stats"]["search_status"] == "budget_exhausted");
}

TEST_CASE("enumerate k33 writes 512 rows and a summary") {
  const Run r = cdc("enumerate --graph k33");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "bits_hex,type_a,type_b");
  int rows = 0;
  std::string summary;
  while (std::getline(in, line)) {
    if (line.starts_with("# summary ")) {
      summary = line.substr(10);
      continue;
    }
    CHECK(line.starts_with("9:"));
    ++rows;
  }
  CHECK(rows == 512);
  const auto s = nlohmann::json::parse(summary);
  CHECK(s["total"] == 512);
  CHECK(s["intersection_free"].get<int>() >= 1);
  CHECK(cdc("enumerate --graph k33 --threads 3").out == r.out);
  const Run free = cdc("enumerate --graph k33 --only-free");
  CHECK(std::count(free.out.begin(), free.out.end(), '\n') == 2 + s["intersection_free"].get<int>());
  CHECK(cdc("enumerate --graph petersen --enumerate-threshold 10").code == 1);
}

TEST_CASE("verify accepts a certificate and itemizes a bad cover") {
  const std::string cert = temp_path("cert.json");
  REQUIRE(cdc("search --graph cube --out " + cert).code == 0);
  const Run ok = cdc("verify --graph cube --cover " + cert);
  CHECK(ok.code == 0);
  const std::string bad = temp_path("bad.json");
  std::ofstream(bad) << "[[0,1,2,3],[2,3,4,5],[4,5,6,7],[6,7,0,1],[0,3,4,7]]";
  const Run r = cdc("verify --graph cube --cover " + bad);
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "invalid");
  bool once = false;
  for (const auto& v : j["violations"]) once |= v["message"].get<std::string>().find("covered once") != std::string::npos;
  CHECK(once);
  const std::string junk = temp_path("junk.json");
  std::ofstream(junk) << "{not json";
  CHECK(nlohmann::json::parse(cdc("verify --graph cube --cover " + junk).out)["error"] == "parse");
}

TEST_CASE("info, build, halfedge-check, anneal and export-dot") {
  const auto info = nlohmann::json::parse(cdc("info --graph petersen").out);
  CHECK(info["vertices"] == 10);
  CHECK(info["edges"] == 15);
  const Run build = cdc("build --graph k33");
  REQUIRE(build.code == 0);
  const auto b = nlohmann::json::parse(build.out);
  CHECK(b["l2_vertices"] == 18);
  CHECK(b["l2_edges"] == 36);
  CHECK(b["cliques"] == 9);
  CHECK(cdc("build --graph k33 --format dot").out.starts_with("graph"));
  const Run he = cdc("halfedge-check --graph desargues");
  CHECK(he.code == 0);
  CHECK(nlohmann::json::parse(he.out)["report"]["equivalent"] == true);
  const Run an = cdc("anneal --graph petersen --seed 1");
  CHECK(an.code == 0);
  CHECK(nlohmann::json::parse(an.out)["certificate"]["verdict"] == "valid_cdc");
  const Run dot = cdc("export-dot --graph k33 --layer l2 --labeling 9:000");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("open") != std::string::npos);
  CHECK(cdc("export-dot --graph k33 --layer lg --labeling 9:000").code == 0);
  CHECK(cdc("export-dot --graph k33 --layer l2 --labeling 8:00").code == 1);
}
