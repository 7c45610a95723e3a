#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "artin/cli.hpp"
#include "artin/group.hpp"

using namespace artin;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("predicates use the exit status") {
  CHECK(run({"--type", "A3", "eq", "2 3 1 2 3 1", "1 2 1 3 2 1"}).code == 0);
  Result r = run({"--type", "A2", "eq", "1 2", "2 1"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  CHECK(run({"--type", "A2", "is-pal", "1 2 2 1"}).code == 0);
  CHECK(run({"--type", "A2", "is-pure", "1"}).code == 1);
  CHECK(run({"--type", "A2", "eq", "1 -1", ""}).code == 0);
}

TEST_CASE("comparison and sign") {
  Result r = run({"--type", "A2", "cmp", "--order", "dehornoy", "1 2", "1 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "LESS\n");
  CHECK(run({"--type", "A2", "cmp", "1 2 2 1", "1 1 1 1"}).out == "GREATER\n");
  CHECK(run({"--type", "A3", "sign", "1 -2"}).out == "POSITIVE\n");
  CHECK(run({"--type", "B3", "sign", "--order", "typeb", "3"}).out == "POSITIVE\n");
  // Magnus reads the word in the free group on the generators.
  CHECK(run({"--type", "A3", "sign", "--order", "magnus", "1 2 -1 -2"}).out == "POSITIVE\n");
}

TEST_CASE("domain errors exit with 3") {
  Result r = run({"--type", "A3", "unpal", "1 2 3 1 2 1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("NotPure") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(run({"--type", "A3", "unpal", "1 2"}).code == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"eq", "1", "1"}).code == 2);
  CHECK(run({"--type", "A3"}).code == 2);
  CHECK(run({"--type", "Q3", "delta"}).code == 2);
  CHECK(run({"--type", "A3", "eq", "1"}).code == 2);
  CHECK(run({"--type", "A3", "eq", "1 x", "1"}).code == 2);
  CHECK(run({"--type", "A3", "eq", "1 7", "1 1"}).code == 2);
  CHECK(run({"--type", "A3", "--matrix", "m.txt", "delta"}).code == 2);
}

TEST_CASE("monoid subcommands") {
  CHECK(run({"--type", "A3", "delta"}).out == "1 2 1 3 2 1\n");
  CHECK(run({"--type", "A3", "nf", "1 2 1"}).out == "{1,2}\n");
  CHECK(run({"--type", "A2", "extract", "2 1 2", "1"}).out == "2 1\n");
  CHECK(run({"--type", "A2", "extract", "2", "1"}).code == 1);
  CHECK(run({"--type", "B2", "lcm", "1", "2"}).out == "1 2 1 2\n");
  CHECK(run({"--type", "A2", "sset", "1 2 1"}).out == "{1,2}\n");
  CHECK(run({"--type", "A2", "fset", "1 2"}).out == "{2}\n");
  CHECK(run({"--type", "A2", "rev", "1 2"}).out == "2 1\n");
  CHECK(run({"--type", "A3", "tau", "1 2"}).out == "3 2\n");
  CHECK(run({"--type", "A2", "pal", "1 2"}).out == "1 2 2 1\n");
}

TEST_CASE("infinite type works at monoid level only") {
  const char* path = "cli_test_matrix.txt";
  {
    std::ofstream f(path);
    f << "rank 3\nm 1 2 3\nm 2 3 4\nm 1 3 inf\n";
  }
  CHECK(run({"--matrix", path, "eq", "2 3 2 3", "3 2 3 2"}).code == 0);
  Result none = run({"--matrix", path, "lcm", "1", "3"});
  CHECK(none.code == 1);
  CHECK(none.out == "none\n");
  CHECK(run({"--matrix", path, "delta"}).code == 3);
  CHECK(run({"--matrix", path, "unpal", "1 1"}).code == 3);
  std::remove(path);
}

TEST_CASE("decomposition subcommands") {
  CHECK(run({"--type", "A3", "decompose-canonical", "1 2 3 1 2 1"}).out == "y=[3 2] I={1,3}\n");
  CHECK(run({"--type", "A3", "decompose-tau", "2 1 3 2"}).out == "y=[2] I={1,3}\n");
  CHECK(run({"--type", "A3", "decompose", "1 1"}).out == "y=[1] I={}\n");
  CHECK(run({"--type", "A2", "delta-assoc", "1 2 1 1 1"}).out == "1\n");
  CHECK(run({"--type", "A2", "symmetrize", "", "1", "--commuting"}).code == 3);
  CHECK(run({"--type", "A2", "symmetrize", "", "1"}).code == 0);
}

TEST_CASE("oracle and Weyl subcommands") {
  CHECK(run({"--type", "A3", "oracle-eq", "2 3 1 2 3 1", "1 2 1 3 2 1"}).code == 0);
  CHECK(run({"--type", "A3", "oracle-squarefree", "1 2 1 3 2 1"}).code == 0);
  CHECK(run({"--type", "A3", "oracle-squarefree", "1 1"}).code == 1);
  CHECK(run({"--type", "H3", "weyl-order"}).out == "120\n");
  Result inv = run({"--type", "A3", "weyl-involutions"});
  CHECK(inv.code == 0);
  CHECK(inv.out.rfind("count 9\n", 0) == 0);

  const char* path = "cli_test_presentation.txt";
  {
    std::ofstream f(path);
    f << "gens 2\nrel 1 1 = 2 2\n";
  }
  CHECK(run({"--presentation", path, "oracle-eq", "1 1", "2 2"}).code == 0);
  CHECK(run({"--presentation", path, "oracle-eq", "1", "2"}).code == 1);
  std::remove(path);
}

TEST_CASE("json records") {
  Result r = run({"--type", "A3", "--json", "decompose-canonical", "1 2 3 1 2 1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "decompose-canonical");
  CHECK(j["inputs"][0] == "1 2 3 1 2 1");
  CHECK(j["result"]["I"] == nlohmann::json::array({1, 3}));
  CHECK(j["result"]["reconstructs"] == true);

  ArtinGroup a3(builtin("A", 3));
  CHECK(a3.eq(a3.from_word(parse_word(j["result"]["y"].get<std::string>())), a3.from_word({3, 2})));

  // Every emitted word re-parses to an equal element.
  for (const std::string& w : {"1 -2 3", "-1 -1", "2 3 -1 2"}) {
    auto p = nlohmann::json::parse(run({"--type", "A3", "--json", "pal", w}).out);
    GroupElement x = a3.from_word(parse_word(w));
    CHECK(a3.eq(a3.from_word(parse_word(p["result"].get<std::string>())),
                a3.mult(x, a3.rev(x))));
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> calls{
      {"--type", "A3", "decompose-canonical", "1 2 3 1 2 1"},
      {"--type", "A3", "--json", "oracle-decomps", "1 2 3 1 2 1"},
      {"--type", "A4", "symmetrize", "2 -3", "1"},
      {"--type", "B3", "weyl-involutions"},
  };
  for (const auto& c : calls) {
    Result a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

}  // TEST_SUITE
