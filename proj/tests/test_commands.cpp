#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ooc/commands.hpp"
#include "ooc/family_io.hpp"
#include "ooc/oracle.hpp"

using namespace ooc;

namespace {

ConstructArgs construct_args(int n, int w, int la, int lc, int c) {
  ConstructArgs args;
  args.requirement = {n, w, la, lc};
  args.c = c;
  return args;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  return lines;
}

}  // namespace

TEST_CASE("construct writes verifiable families") {
  std::ostringstream families, log;
  REQUIRE(cmd_construct(construct_args(19, 3, 1, 1, 3), families, log) == kExitOk);
  CHECK(log.str().find("families: 32") != std::string::npos);
  CHECK(log.str().find("johnson capacity: 3") != std::string::npos);
  CHECK(log.str().find("warning") == std::string::npos);
  CHECK(count_lines(families.str()) == 33);

  std::istringstream in(families.str());
  const auto file = read_families(in);
  REQUIRE(file.header.has_value());
  CHECK(file.header->requirement == Requirement{19, 3, 1, 1});
  CHECK(file.families.size() == 32);

  std::istringstream again(families.str());
  std::ostringstream report, err;
  CHECK(cmd_verify(again, report, err) == kExitOk);
  CHECK(report.str() == "verified 32 families, 0 with violations\n");
}

TEST_CASE("construct above capacity warns and emits nothing") {
  std::ostringstream families, log;
  CHECK(cmd_construct(construct_args(19, 3, 1, 1, 4), families, log) == kExitOk);
  CHECK(log.str().find("warning: c exceeds Johnson capacity 3") != std::string::npos);
  CHECK(log.str().find("families: 0") != std::string::npos);
  CHECK(count_lines(families.str()) == 1);  // metadata only
}

TEST_CASE("construct with c = 1 lists each valid code") {
  std::ostringstream families, log;
  CHECK(cmd_construct(construct_args(7, 3, 1, 1, 1), families, log) == kExitOk);
  std::istringstream in(families.str());
  const auto file = read_families(in);
  CHECK(file.families.size() == 2);
  for (const auto& f : file.families) CHECK(oracle::exact_autocorrelation(f.codes.at(0)) <= 1);
}

TEST_CASE("construct count-only and graph export") {
  auto args = construct_args(25, 3, 1, 1, 4);
  args.count_only = true;
  const std::string graph_path = "test_commands_graph.json";
  std::ostringstream families, log;
  CHECK(cmd_construct(args, families, log, graph_path) == kExitOk);
  CHECK(families.str().empty());
  CHECK(log.str().find("families: 240") != std::string::npos);
  std::ifstream graph(graph_path);
  std::string json;
  std::getline(graph, json);
  CHECK(json.rfind("{\"edges\":[[", 0) == 0);
  CHECK(json.find("\"n_nodes\":80") != std::string::npos);
  std::remove(graph_path.c_str());
}

TEST_CASE("construct output is byte-identical across worker counts") {
  std::string reference;
  for (int workers : {1, 2, 8}) {
    auto args = construct_args(25, 3, 1, 1, 3);
    args.pipeline.workers = workers;
    std::ostringstream families, log;
    REQUIRE(cmd_construct(args, families, log) == kExitOk);
    if (reference.empty()) reference = families.str();
    CHECK(families.str() == reference);
  }
  CHECK(count_lines(reference) == 2721);
}

TEST_CASE("construct at higher limits reports exact-mode extras") {
  std::ostringstream families, log;
  CHECK(cmd_construct(construct_args(13, 4, 2, 2, 2), families, log) == kExitOk);
  CHECK(log.str().find("exact-mode-only codes: ") != std::string::npos);
  std::istringstream in(families.str());
  std::ostringstream report, err;
  CHECK(cmd_verify(in, report, err) == kExitOk);

  auto exact = construct_args(13, 4, 2, 2, 2);
  exact.pipeline.mode = FilterMode::Exact;
  std::ostringstream exact_families, exact_log;
  CHECK(cmd_construct(exact, exact_families, exact_log) == kExitOk);
  std::istringstream exact_in(exact_families.str());
  CHECK(cmd_verify(exact_in, report, err) == kExitOk);
}

TEST_CASE("construct usage errors") {
  std::ostringstream families, log;
  CHECK(cmd_construct(construct_args(5, 7, 1, 1, 1), families, log) == kExitUsage);
  CHECK(cmd_construct(construct_args(19, 3, 1, 1, 0), families, log) == kExitUsage);
  auto mirrored = construct_args(13, 4, 2, 2, 2);
  mirrored.pipeline.mode = FilterMode::Exact;
  mirrored.pipeline.equivalence = Equivalence::RotationReflection;
  CHECK(cmd_construct(mirrored, families, log) == kExitUsage);
}

TEST_CASE("construct budget exhaustion") {
  auto args = construct_args(25, 3, 1, 1, 3);
  args.budget_seconds = -1.0;
  std::ostringstream families, log;
  CHECK(cmd_construct(args, families, log) == kExitBudget);
}

TEST_CASE("census command") {
  CensusArgs args;
  args.c_values = {3, 4};
  args.max_offset = 1;
  std::ostringstream out, log;
  CHECK(cmd_census(args, out, log) == kExitOk);
  CHECK(out.str() ==
        "omega,lambda,c,offset,n,family_count\n3,1,3,0,19,32\n3,1,3,1,20,0\n3,1,4,0,25,240\n3,1,4,1,26,384\n");

  args.pipeline.workers = 8;
  std::ostringstream again;
  CHECK(cmd_census(args, again, log) == kExitOk);
  CHECK(again.str() == out.str());

  args.json = true;
  std::ostringstream json;
  CHECK(cmd_census(args, json, log) == kExitOk);
  CHECK(json.str().find("\"ooc-census\"") != std::string::npos);

  args.lambda = 2;
  CHECK(cmd_census(args, out, log) == kExitUsage);
}

TEST_CASE("bound command") {
  std::ostringstream out, log;
  CHECK(cmd_bound({19, 3, 1, false, 0, false}, out, log) == kExitOk);
  CHECK(out.str() == "3\n");
  std::ostringstream nj;
  CHECK(cmd_bound({0, 3, 1, true, 3, false}, nj, log) == kExitOk);
  CHECK(nj.str() == "19\n");
  std::ostringstream nested;
  CHECK(cmd_bound({12, 5, 3, false, 0, true}, nested, log) == kExitOk);
  CHECK(nested.str() == "7\n");
  CHECK(cmd_bound({19, 3, 3, false, 0, false}, out, log) == kExitUsage);
  CHECK(cmd_bound({0, 3, 2, true, 3, false}, out, log) == kExitUsage);
}

TEST_CASE("verify reports violations and needs a requirement") {
  const std::string bad =
      "{\"n\":10,\"c\":1,\"codes\":[\"1000010000\"]}\n"
      "{\"n\":10,\"c\":2,\"codes\":[\"1100000000\",\"0110000000\"]}\n";
  {
    std::istringstream in(bad);
    std::ostringstream out, err;
    CHECK(cmd_verify(in, out, err) == kExitUsage);
  }
  std::istringstream in(bad);
  std::ostringstream out, err;
  CHECK(cmd_verify(in, out, err, Requirement{10, 2, 1, 1}) == kExitVerifyFailed);
  CHECK(out.str().find("family 0: member 0 auto-correlation 2 at shift 5") != std::string::npos);
  CHECK(out.str().find("family 1: members 0,1 cross-correlation 2") != std::string::npos);
  CHECK(out.str().find("verified 2 families, 2 with violations") != std::string::npos);
}

TEST_CASE("family file parse errors") {
  std::istringstream garbage("{\"n\":5,\"c\":1,\"codes\":[\"10\"]}\n");
  CHECK_THROWS_AS(read_families(garbage), std::invalid_argument);
  std::istringstream notjson("hello\n");
  CHECK_THROWS_AS(read_families(notjson), std::invalid_argument);
  std::istringstream wrong_c("{\"n\":5,\"c\":2,\"codes\":[\"11000\"]}\n");
  CHECK_THROWS_AS(read_families(wrong_c), std::invalid_argument);
  std::istringstream blank("\n\n");
  CHECK(read_families(blank).families.empty());
}
