#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ocdc/certificate_io.hpp"
#include "ocdc/cli.hpp"

using namespace ocdc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run tool(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ocdc_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("gen") {
  CHECK(tool({"gen", "petersen"}).out == "IheA@GUAo\n");
  const Run e = tool({"gen", "cycle:3", "--format", "edges"});
  CHECK(e.out == "3 3\n0 1\n0 2\n1 2\n");
  CHECK(tool({"gen", "nosuch:1"}).code == cli::kUsage);
  CHECK(tool({}).code == cli::kUsage);
  CHECK(tool({"frobnicate"}).code == cli::kUsage);
  CHECK(tool({"--help"}).code == cli::kOk);
}

TEST_CASE("built certificates re-verify from disk") {
  for (std::vector<std::string> b : {std::vector<std::string>{"complete:5"},
                                     {"complete:4"},
                                     {"complete:8"},
                                     {"complete_bipartite:3,5"},
                                     {"hypercube:3", "--method", "planar"},
                                     {"wheel:6"},
                                     {"mobius_kantor"},
                                     {"prism:3", "--method", "cubic"}}) {
    CAPTURE(b[0]);
    const std::string path = temp_path("build.json");
    std::vector<std::string> args{"--out", path, "build"};
    args.insert(args.end(), b.begin(), b.end());
    REQUIRE(tool(args).code == cli::kOk);
    const Run v = tool({"verify", path});
    CHECK(v.code == cli::kOk);
    CHECK(json::parse(v.out)["ok"] == true);
    std::remove(path.c_str());
  }
  CHECK(tool({"build", "petersen"}).code == cli::kUsage);
  CHECK(tool({"build", "path:3"}).code == cli::kUsage);
  CHECK(tool({"build", "complete:6", "--method", "planar"}).code == cli::kUsage);
}

TEST_CASE("verify reports failures with exit 2") {
  const Run k6 = tool({"build", "complete:6"});
  json j = json::parse(k6.out);
  CHECK(tool({"verify", "-"}, k6.out).code == cli::kOk);
  const Run small = tool({"verify", "--kind", "SOCDC"}, k6.out);
  CHECK(small.code == cli::kNegative);
  CHECK(json::parse(small.out)["ok"] == false);
  j["elements"].erase(0);
  CHECK(tool({"verify"}, j.dump()).code == cli::kNegative);
  CHECK(tool({"verify", "--family", "complete:7"}, k6.out).code == cli::kNegative);
  CHECK(tool({"verify"}, "{not json").code == cli::kUsage);
  CHECK(tool({"verify", "/nonexistent/cert.json"}).code == cli::kUsage);
}

TEST_CASE("documented examples") {
  const std::string k4 = temp_path("k4_ocdc.json");
  REQUIRE(tool({"--out", k4, "build", "complete:4"}).code == cli::kOk);
  const Run v = tool({"verify", "--graph", "C~", "--cert", k4});
  CHECK(v.code == cli::kOk);
  CHECK(json::parse(v.out)["size_flag"] == "not small");
  std::remove(k4.c_str());
  const Run b = tool({"build", "bipartite:3,4"});
  const Run bv = tool({"verify", "-"}, b.out);
  CHECK(bv.code == cli::kOk);
  CHECK(json::parse(bv.out)["count"] == 4);
  CHECK(json::parse(bv.out)["size_bound"] == 6);
  const Run verbose = tool({"-v", "search", "socdc", "--family", "complete:6"});
  CHECK(verbose.err.find("NoneExists") != std::string::npos);
}

TEST_CASE("search exit codes") {
  const Run none = tool({"search", "socdc", "--family", "complete:6"});
  CHECK(none.code == cli::kNegative);
  CHECK(json::parse(none.out)["status"] == "NoneExists");
  const Run found = tool({"search", "socdc", "--graph", "IheA@GUAo"});
  CHECK(found.code == cli::kOk);
  CHECK(json::parse(found.out)["certificate"]["kind"] == "SOCDC");
  const Run budget = tool({"search", "socdc", "--family", "complete:6", "--node-budget", "5"});
  CHECK(budget.code == cli::kUnresolved);
  CHECK(json::parse(budget.out)["status"] == "Unresolved");
  const Run k4 = tool({"search", "ocdc-min", "--family", "complete:4"});
  CHECK(json::parse(k4.out)["lower_bound"] == 4);
  CHECK(tool({"search", "ocdc", "--family", "complete:4", "--max-count", "3"}).code == cli::kNegative);
  CHECK(tool({"search", "oppdc", "--family", "complete:5"}).code == cli::kNegative);
  CHECK(tool({"search", "oppdc-seq", "--family", "complete:9"}).code == cli::kOk);
  CHECK(tool({"search", "oppdc-apex", "--family", "complete:7"}).code == cli::kOk);
  CHECK(tool({"search", "unorientable-cdc", "--family", "petersen"}).code == cli::kOk);
  const Run filter = tool({"search", "filter", "--family", "k4_chain:2"});
  CHECK(json::parse(filter.out)["candidate"] == false);
  CHECK(tool({"search", "socdc"}).code == cli::kUsage);
  CHECK(tool({"search", "nonsense", "--family", "complete:3"}).code == cli::kUsage);
  CHECK(tool({"search", "socdc", "--family", "path:3"}).code == cli::kUsage);
}

TEST_CASE("pipelines are deterministic") {
  const Run a = tool({"search", "socdc", "--family", "complete:7", "--threads", "1"});
  const Run b = tool({"search", "socdc", "--family", "complete:7", "--threads", "3"});
  CHECK(json::parse(a.out)["certificate"] == json::parse(b.out)["certificate"]);
  CHECK(tool({"build", "complete:10"}).out == tool({"build", "complete:10"}).out);
}

TEST_CASE("compose pipelines") {
  const std::string p = temp_path("k7.json"), k4 = temp_path("k4.json"), k5 = temp_path("k5.json");
  REQUIRE(tool({"--out", p, "search", "oppdc", "--family", "complete:7"}).code == cli::kOk);
  REQUIRE(tool({"--out", k4, "build", "complete:4"}).code == cli::kOk);
  REQUIRE(tool({"--out", k5, "build", "complete:5"}).code == cli::kOk);

  const Run joined = tool({"compose", "join", "--cert", p});
  REQUIRE(joined.code == cli::kOk);
  CHECK(read_certificate(joined.out).size() == 7);
  const Run stripped = tool({"compose", "strip", "--cert", "-", "--apex", "7"}, joined.out);
  CHECK(stripped.code == cli::kOk);
  CHECK(json::parse(stripped.out)["kind"] == "OPPDC");
  CHECK(tool({"compose", "prism", "--cert", p}).code == cli::kOk);

  const Run cut = tool({"compose", "cutvertex", "--cert", k4, "--cert", k5, "--map1", "0,1,2,3", "--map2", "3,4,5,6,7"});
  REQUIRE(cut.code == cli::kOk);
  CHECK(read_certificate(cut.out).size() == 8);
  const Run two = tool({"compose", "twocut", "--cert", k4, "--cert", k5, "--map1", "0,1,2,3", "--map2", "0,1,4,5,6", "--v1", "0",
                       "--v2", "1", "--mode", "no_edge"});
  REQUIRE(two.code == cli::kOk);
  CHECK(read_certificate(two.out).size() == 6);
  const Run special = tool({"compose", "special", "--table", "K4K6", "--labels", "0,1,2,3,4,5,6,7"});
  CHECK(special.code == cli::kOk);
  const Run sub = tool({"compose", "subdivide", "--cert", k5, "--edge", "0,1"});
  CHECK(sub.code == cli::kOk);
  const Run prod = tool({"compose", "product", "--cert", k5, "--n", "11"});
  CHECK(read_certificate(prod.out).size() == 54);
  const Run lift = tool({"compose", "lift", "--cert", p, "--factor", "path:2"});
  CHECK(lift.code == cli::kOk);
  CHECK(json::parse(lift.out)["status"] == "Found");

  CHECK(tool({"compose", "cutvertex", "--cert", k4}).code == cli::kUsage);
  CHECK(tool({"compose", "cutvertex", "--cert", k4, "--cert", k5, "--map1", "0,x"}).code == cli::kUsage);
  CHECK(tool({"compose", "twocut", "--cert", k4, "--cert", k5, "--mode", "sideways"}).code == cli::kUsage);
  CHECK(tool({"compose", "explode", "--cert", k4}).code == cli::kUsage);
  for (const auto& f : {p, k4, k5}) std::remove(f.c_str());
}

TEST_CASE("analyze") {
  const Run k6 = tool({"analyze", "--family", "complete:6"});
  CHECK(k6.code == cli::kOk);
  CHECK(k6.out.find("conjecture exception") != std::string::npos);
  const Run pet = tool({"analyze", "--family", "petersen"});
  CHECK(pet.out.find("any OCDC is small") != std::string::npos);
  CHECK(pet.out.find("at most n/2 + 2 = 7") != std::string::npos);
  const Run chain = tool({"analyze", "--family", "k4_chain:2"});
  CHECK(chain.out.find("cut vertices: 3") != std::string::npos);
  CHECK(chain.out.find("not_2_connected") != std::string::npos);
}
