// Copyright 2026 The clawlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = clawlab::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json result_of(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

const std::vector<std::vector<std::string>> kCommands = {
    {"rates"},
    {"rates", "--r-star", "0.75"},
    {"rates", "--r-lower", "0.2"},
    {"variational", "phi", "--gamma", "0.6"},
    {"variational", "psi", "--p", "0.7"},
    {"variational", "kkt", "--c", "0.3"},
    {"variational", "vgamma", "--lambdas", "0,0.5", "--gamma", "0.1"},
    {"variational", "xpstar", "--p", "0.3"},
    {"enumerate", "clawfree", "--n", "5", "--m", "6"},
    {"enumerate", "cobipartite", "--n", "5"},
    {"enumerate", "bipartite", "--n", "5", "--k", "3"},
    {"enumerate", "table", "--n", "4"},
    {"enumerate", "probability", "--n", "5", "--p", "0.3"},
    {"enumerate", "cubic", "--v", "6"},
    {"colorings", "verify", "--n", "4"},
    {"colorings", "extremal", "--n", "4", "--kind", "f"},
    {"colorings", "stability", "--n", "4"},
    {"cutnorm", "matrix", "--matrix", "[[0.5,-1],[0.25,1]]"},
    {"cutnorm", "graphs", "--a", "C5", "--b", "P5", "--relabel"},
    {"cutnorm", "graphon", "--g", "C6", "--graphon", "wstar:0.8"},
    {"graphon", "stats", "--graphon", "lambda:0,0.5,0.75", "--p", "0.4"},
    {"graphon", "discretize", "--graphon", "constant:0.3", "--n", "3"},
    {"sample", "gnp", "--n", "9", "--p", "0.4"},
    {"sample", "gnm", "--n", "9", "--m", "12"},
    {"sample", "wgraph", "--n", "9", "--graphon", "wstar:0.8"},
    {"mc", "clawfree", "--n", "6", "--p", "0.5", "--trials", "500"},
    {"mc", "conditional", "--n", "8", "--p", "0.9", "--trials", "500"},
    {"mc", "domination", "--n", "8", "--predicates", "5"},
    {"mc", "concentration", "--n", "10", "--region", "constant:1", "--trials", "200"},
    {"mc", "homogeneity", "--n", "8", "--p", "0.5", "--samples", "500"},
    {"counting", "asymptotic", "--n", "20", "--m", "150"},
    {"counting", "compare", "--n", "8", "--m", "21"},
    {"counting", "series", "--gamma", "0.75"},
    {"counting", "inequalities", "--tuples", "50"},
    {"counting", "hypergeom", "--n", "100", "--m", "50", "--k", "2", "--l", "1"},
    {"figure1", "--format", "json", "--step", "0.1"},
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  CHECK(result_of({"rates", "--r-star", "0.75"})["result"]["value"] == 0.5);
  CHECK(result_of({"enumerate", "clawfree", "--n", "4"})["result"]["count"] == "60");
  const auto colorings = result_of({"colorings", "verify", "--n", "3"})["result"];
  CHECK(colorings["valid"] == 23);
  CHECK(colorings["violations"] == 0);
  CHECK(colorings["equality"] == 6);
}

TEST_CASE("every command output parses back under the schema") {
  for (const auto& args : kCommands) {
    const auto j = result_of(args);
    const auto errors = clawlab::cli::schema_errors(j);
    CHECK_MESSAGE(errors.empty(), args[0] << " " << (args.size() > 1 ? args[1] : "") << ": "
                                          << (errors.empty() ? "" : errors.front()));
    CHECK(json::parse(j.dump()) == j);
  }
  CHECK_FALSE(clawlab::cli::schema_errors(json{{"command", "x"}}).empty());
  CHECK_FALSE(clawlab::cli::schema_errors(json::array()).empty());
}

TEST_CASE("identical argv and seed give byte-identical payloads") {
  for (const auto& args : kCommands) {
    auto with_seed = args;
    with_seed.insert(with_seed.begin(), {"--seed", "42"});
    auto a = result_of(with_seed);
    auto threaded = with_seed;
    threaded.insert(threaded.begin(), {"--threads", "3"});
    auto b = result_of(threaded);
    a.erase("runtime_s");
    b.erase("runtime_s");
    CHECK_MESSAGE(a.dump() == b.dump(), args[0]);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"rates", "--bogus"}).code == 2);
  CHECK(run({"enumerate", "clawfree"}).code == 2);
  CHECK(run({"enumerate", "clawfree", "--n", "x"}).code == 2);
  CHECK(run({"mc", "clawfree", "--n", "5"}).code == 2);
  CHECK(run({"--format", "xml", "rates"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto cap = run({"enumerate", "clawfree", "--n", "30"});
  CHECK(cap.code == 1);
  CHECK(cap.err.find("error") != std::string::npos);
  CHECK(run({"rates", "--r-star", "1.5"}).code == 1);
  CHECK(run({"counting", "asymptotic", "--n", "10", "--m", "5"}).code == 1);
  CHECK(run({"cutnorm", "graphs", "--a", "K4", "--b", "K5"}).code == 1);
}

TEST_CASE("help lists every subcommand") {
  const auto r = run({"--help"});
  for (const char* name : {"rates", "variational", "enumerate", "colorings", "cutnorm", "graphon", "sample",
                           "mc", "counting", "figure1"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
}

TEST_CASE("CSV output") {
  const auto table = run({"--format", "csv", "enumerate", "table", "--n", "4"});
  REQUIRE(table.code == 0);
  CHECK(table.out.find("# rows") == 0);
  CHECK(table.out.find("count_clawfree,count_cobipartite,fraction,m,n\n") != std::string::npos);
  CHECK(table.out.find("16,16,1.0,3,4") != std::string::npos);
  const auto fig = run({"figure1"});
  REQUIRE(fig.code == 0);
  CHECK(fig.out.find("# entropy_density") != std::string::npos);
  CHECK(fig.out.find("# rate_function") != std::string::npos);
  CHECK(fig.out.find("false,0.75,0.5\n") != std::string::npos);
  CHECK(fig.out.find("true,0.6909830056250525,") != std::string::npos);
  const auto scalar = run({"rates", "--r-star", "0.75", "--format", "csv"});
  CHECK(scalar.out == "key,value\nvalue,0.5\n");
  CHECK(clawlab::cli::to_csv(json{{"s", "a,b"}}) == "key,value\ns,\"a,b\"\n");
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "clawlab_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "rates", "--r-lower", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["result"]["value"] == 0.5);
  std::filesystem::remove(path);
  CHECK(run({"--out", "/nonexistent-dir/x.json", "rates"}).code == 1);
}

TEST_CASE("graph inputs") {
  const auto path = std::filesystem::temp_directory_path() / "clawlab_cli_graph.json";
  std::ofstream(path) << R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3], [0, 2], [1, 3]]})";
  const auto j = result_of({"cutnorm", "graphs", "--a", "@" + path.string(), "--b", "E4"});
  CHECK(j["result"]["value"] == 0.75);
  CHECK(result_of({"cutnorm", "graphs", "--a", "C~", "--b", "K4"})["result"]["value"] == 0.0);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
