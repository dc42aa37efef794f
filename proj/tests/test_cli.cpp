#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "rdom/io.hpp"

using namespace rdom;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Scratch directory holding a few generated graphs.
struct Workspace {
  fs::path dir = fs::temp_directory_path() / ("rdom_cli_" + std::to_string(::getpid()));
  Workspace() {
    fs::create_directories(dir);
    for (auto [name, family, params] : std::initializer_list<std::tuple<const char*, const char*, std::vector<std::string>>>{
             {"p3.el", "path", {"3"}},
             {"p5.el", "path", {"5"}},
             {"star.el", "star", {"6"}},
             {"k4.el", "complete", {"4"}},
             {"c6.el", "cycle", {"6"}},
             {"grid.el", "grid", {"4", "4"}},
         }) {
      std::vector<std::string> args{"gen", family};
      args.insert(args.end(), params.begin(), params.end());
      args.insert(args.end(), {"-o", path(name)});
      REQUIRE(call(args).code == 0);
    }
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen") {
    const auto p5 = call({"gen", "path", "5"});
    CHECK(p5.code == 0);
    CHECK(p5.out == "1 2\n2 3\n3 4\n4 5\n");
    std::istringstream grid(call({"gen", "grid", "3", "3"}).out);
    CHECK(parse_edge_list(grid).size() == 9);
    const auto a = call({"gen", "partial_ktree", "10", "2", "0.8", "--seed", "7"});
    const auto b = call({"gen", "partial_ktree", "10", "2", "0.8", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(call({"gen", "grid", "3"}).code == cli::kUsage);
  }

  TEST_CASE("domset") {
    Workspace ws;
    const auto p5 = call({"domset", ws.path("p5.el"), "1", "--verify"});
    REQUIRE(p5.code == 0);
    const auto j = p5.json();
    CHECK(j["D_size"] == 4);
    CHECK(j["opt_size"] == 2);
    CHECK(j["certificate_c"] == 3);
    CHECK(j["ratio_within_certificate"] == true);

    CHECK(call({"domset", ws.path("star.el"), "1"}).json()["D_size"] == 1);

    const auto minor = call({"domset", ws.path("p5.el"), "1", "--connected", "minor", "--verify"}).json();
    CHECK(minor["connected"]["D_prime"] == Json::parse("[1,2,3,4]"));
    CHECK(minor["connected"]["dominating"] == true);

    const auto cover = ws.path("cover.json");
    const auto dot = ws.path("out.dot");
    CHECK(call({"domset", ws.path("grid.el"), "1", "--cover-out", cover, "--dot", dot}).code == 0);
    CHECK(Json::parse(slurp(cover))["degree"].get<int>() >= 1);
    CHECK(slurp(dot).rfind("graph", 0) == 0);
  }

  TEST_CASE("simulate") {
    Workspace ws;
    const auto p3 = call({"simulate", ws.path("p3.el"), "1", "domset", "congest_bc"});
    REQUIRE(p3.code == 0);
    CHECK(p3.json()["outputs"]["D"] == Json::parse("[1,2]"));
    CHECK(p3.json()["matches_sequential"] == true);

    const auto star = call({"simulate", ws.path("star.el"), "1", "cds-local"});
    REQUIRE(star.code == 0);
    CHECK(star.json()["rounds"] == 4);

    const auto trace = ws.path("t.jsonl");
    const auto wr = call({"simulate", ws.path("p5.el"), "1", "wreach", "congest_bc", "--trace", trace});
    REQUIRE(wr.code == 0);
    std::istringstream lines(slurp(trace));
    int wreach_rounds = 0;
    for (std::string line; std::getline(lines, line);) {
      if (Json::parse(line)["phase"] == "wreach") ++wreach_rounds;
    }
    CHECK(wreach_rounds == 2);

    const auto cc = call({"simulate", ws.path("c6.el"), "1", "cds-congest", "congest_bc"});
    REQUIRE(cc.code == 0);
    CHECK(cc.json()["rounds"] == 7);
    CHECK(cc.json()["within_congestion_bound"] == true);

    const auto peel = call({"simulate", ws.path("grid.el"), "1", "domset", "--order-phase", "simulated"});
    REQUIRE(peel.code == 0);
    CHECK(peel.json()["order_phase"]["source"] == "simulated");
    CHECK(peel.json()["matches_sequential"] == true);
  }

  TEST_CASE("verify") {
    Workspace ws;
    for (const char* name : {"p5.el", "k4.el", "c6.el", "star.el", "grid.el"}) {
      CAPTURE(name);
      const auto v = call({"verify", ws.path(name), "1"});
      CHECK(v.code == 0);
      CHECK(v.json()["passed"] == true);
    }

    // Drop vertex 3 from X_1, the only cluster holding N_1[2].
    const auto cover = ws.path("p5cover.json");
    REQUIRE(call({"domset", ws.path("p5.el"), "1", "--cover-out", cover}).code == 0);
    auto j = Json::parse(slurp(cover));
    j["clusters"]["1"] = Json::parse("[1,2]");
    std::ofstream(ws.path("mutated.json")) << j.dump();
    const auto bad = call({"verify", ws.path("p5.el"), "1", "--cover", ws.path("mutated.json")});
    CHECK(bad.code == cli::kVerificationFailed);
    CHECK(bad.json()["passed"] == false);
    CHECK(bad.out.find("N_1[2]") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    Workspace ws;
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"frobnicate"}).code == cli::kUsage);
    CHECK(call({"domset", ws.path("missing.el"), "1"}).code == cli::kUsage);
    CHECK(call({"domset", ws.path("p5.el"), "1", "--connected", "magic"}).code == cli::kUsage);
    CHECK(call({"simulate", ws.path("p5.el"), "1", "gossip"}).code == cli::kUsage);
    const auto tiny = call({"simulate", ws.path("grid.el"), "2", "wreach", "congest_bc", "--kappa", "1"});
    CHECK(tiny.code == cli::kModelViolation);
    CHECK(tiny.err.find("bandwidth") != std::string::npos);
    CHECK(call({"--help"}).code == cli::kOk);
  }

  TEST_CASE("repeated runs are byte-identical") {
    Workspace ws;
    const std::vector<std::vector<std::string>> commands{
        {"gen", "random_tree", "30", "--seed", "5"},
        {"domset", ws.path("grid.el"), "2", "--verify", "--connected", "wreach"},
        {"simulate", ws.path("grid.el"), "1", "cds-congest", "congest_bc"},
        {"simulate", ws.path("grid.el"), "1", "cds-local"},
        {"verify", ws.path("c6.el"), "2"},
    };
    for (const auto& args : commands) {
      CAPTURE(args.front());
      const auto a = call(args);
      const auto b = call(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
    }
  }
}
