#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "liealg/cli.hpp"
#include "liealg/verify.hpp"

using namespace liealg;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("documented examples") {
  auto r = run({"index", "E8", "[0,0,0,0,0,0,0,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "60\n");
  r = run({"blocks", "E8", "--level", "1", "--genus", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run({"alcove", "E8", "--level", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[0,0,0,0,0,0,0,0]\n");
}

TEST_CASE("json output") {
  CHECK(run({"--json", "index", "E8", "[0,0,0,0,0,0,0,1]"}).out == "{\"index\":60}\n");
  CHECK(run({"--json", "dim", "A1", "[3]"}).out == "{\"dim\":4}\n");
  CHECK(run({"--json", "alcove", "A2", "--level", "1"}).out == "{\"alcove\":[[0,0],[0,1],[1,0]]}\n");
  CHECK(run({"--json", "tensor", "A1", "[1]", "[1]"}).out ==
        "{\"decomposition\":[{\"multiplicity\":1,\"weight\":[0]},{\"multiplicity\":1,\"weight\":[2]}]}\n");
  CHECK(run({"--json", "fuse", "A1", "--level", "1", "[1]", "[1]"}).out ==
        "{\"fusion\":[{\"multiplicity\":1,\"weight\":[0]}]}\n");
  CHECK(run({"--json", "fuse", "A1", "--level", "1", "[1]", "[1]", "[0]"}).out == "{\"coefficient\":1}\n");

  // Too big for 64 bits: printed as a string.
  auto big = nlohmann::json::parse(run({"--json", "dim", "E8", "[5,5,5,5,5,5,5,5]"}).out);
  CHECK(big["dim"].is_string());
  CHECK(big["dim"].get<std::string>().size() > 20);

  auto branch = nlohmann::json::parse(run({"--json", "branch", "E8", "[0,0,0,0,0,0,0,1]", "--to", "F4"}).out);
  CHECK(branch["embedding"] == "F4<E8");
  CHECK(branch["index"] == 60);
  CHECK(branch["dim"] == 248);
  CHECK(branch["branching"].size() == 3);
}

TEST_CASE("json output is repeatable") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "verify-paper"},
                                        {"--json", "tensor", "G2", "[1,1]", "[0,1]"},
                                        {"--json", "branch", "E7", "[0,0,0,0,0,0,1]", "--to", "F4"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("blocks requests") {
  const std::string request = R"({"type":"E8","level":1,"genus":2,"labels":[[0,0,0,0,0,0,0,0]]})";
  auto r = run({"--json", "blocks", "--request", request});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"dim\":1}\n");

  auto path = std::filesystem::temp_directory_path() / "liealg_blocks_request.json";
  std::ofstream(path) << R"({"type":"A1","level":2,"genus":0,"labels":[[1],[1],[1],[1]]})";
  r = run({"blocks", "--request", "@" + path.string()});
  std::filesystem::remove(path);
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  CHECK(run({"blocks", "A1", "--level", "2", "--genus", "1", "[1]", "[1]"}).out == "4\n");
  CHECK(run({"blocks", "--request", "{\"type\":\"E8\"}"}).code == 2);
  CHECK(run({"blocks", "--request", "not json"}).code == 2);
}

TEST_CASE("branching with an embedding file") {
  auto path = std::filesystem::temp_directory_path() / "liealg_embedding.txt";
  std::ofstream(path) << "F4 D4\n0 1 0 0\n1 0 0 0\n0 1 1 0\n0 1 1 1\n";
  auto r = run({"branch", "F4", "[1,0,0,0]", "--embedding", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("embedding D4<F4\n"));
  // Ambient type must match the file.
  CHECK(run({"branch", "E6", "[1,0,0,0,0,0]", "--embedding", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"branch", "F4", "[1,0,0,0]", "--embedding", path.string()}).code == 2);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dim", "A2"}).code == 2);
  CHECK(run({"dim", "Q3", "[1]"}).code == 2);
  CHECK(run({"dim", "A2", "[1,0,0]"}).code == 2);
  CHECK(run({"dim", "A2", "[1,-1]"}).code == 2);
  CHECK(run({"dim", "A2", "1,0"}).code == 2);
  CHECK(run({"alcove", "A2", "--level", "-1"}).code == 2);
  CHECK(run({"fuse", "A1", "--level", "1", "[2]", "[0]"}).code == 2);
  CHECK(run({"branch", "E8", "[0,0,0,0,0,0,0,1]"}).code == 2);
  CHECK(run({"branch", "F4", "[0,0,0,1]", "--to", "E6"}).code == 2);
  CHECK(run({"verify-paper", "--fault", "nonsense"}).code == 2);
  auto r = run({"dim", "A2", "[1,0,0]"});
  CHECK(r.err.find("rank") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify-paper") {
  auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  auto report = nlohmann::json::parse(run({"--json", "verify-paper"}).out);
  CHECK(report["claims"].size() >= 16);
  CHECK(report["passed"] == report["total"]);

  CHECK(run({"verify-paper", "--fault", "f4-form"}).code == 1);
  CHECK(run({"verify-paper", "--fault", "d4-zero"}).code == 1);
}

TEST_CASE("fault fixtures fail the right claims") {
  auto failing = [](verify::Fault f) {
    std::set<std::string> ids;
    for (const auto& r : verify::verify_paper(verify::faulty(f)).results) {
      if (!r.pass) ids.insert(r.id);
    }
    return ids;
  };
  auto f4 = failing(verify::Fault::PerturbedF4Form);
  CHECK(f4.contains("theta.F4"));
  CHECK_FALSE(f4.contains("theta.E8"));

  auto d4 = failing(verify::Fault::ZeroD4Projection);
  CHECK(d4.contains("d4.chain.index"));
  CHECK(d4.contains("tower.index.D4<F4"));
  CHECK_FALSE(d4.contains("f4.branch.adjoint"));
}

TEST_CASE("claim inventory") {
  const auto& claims = verify::claim_inventory();
  std::set<std::string> ids;
  for (const auto& c : claims) ids.insert(c.id);
  CHECK(ids.size() == claims.size());
  CHECK(verify::format_rep_sum({{Weight{0, 0}, 2}, {Weight{1, 0}, 1}}) == "{[0,0]:2,[1,0]:1}");
}

TEST_SUITE_END();
