#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "algoglue/cli.hpp"
#include "algoglue/corpus.hpp"
#include "algoglue/io.hpp"

using namespace algoglue;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "algoglue_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("run") {
  auto r = cli({"run", "--program", "tm_not", "--input", "^0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "outcome: Terminated"));
  CHECK(contains(r.out, "final: 1\n"));

  CHECK(cli({"--budget", "0", "run", "--program", "tm_not", "--input", "^0"}).code == 3);
  CHECK(cli({"run", "--budget", "0", "--program", "tm_not", "--input", "^0"}).code == 3);
  CHECK(cli({"run", "--program", "tm_read0", "--input", "^1"}).code == 2);

  auto unknown = cli({"run", "--program", "no_such_program", "--input", "0"});
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.err, "no_such_program"));
  CHECK(cli({"run", "--input", "0"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({}).code == 1);

  auto gcd = cli({"run", "--algorithm", "gcd_A", "--input", "{x: 12, y: 8}"});
  CHECK(gcd.code == 0);
  CHECK(contains(gcd.out, "final: {x: 4, y: 0}"));

  auto dot = scratch("visited.dot");
  auto glued = cli({"--json", "run", "--program", "gcd_glued", "--input", "{x: 12, y: 8}", "--dot", dot});
  CHECK(glued.code == 0);
  CHECK(contains(glued.out, "\"outcome\": \"Terminated\""));
  CHECK(contains(read_text_file(dot), "digraph"));
}

TEST_CASE("demos") {
  auto gcd = cli({"demo", "gcd"});
  CHECK(gcd.code == 0);
  CHECK(contains(gcd.out, "gcd_A abstract run on {x: 12, y: 8}: Terminated, x = 4"));
  CHECK(contains(gcd.out, "over naturals[x,y,w]: Terminated, x = 4"));
  CHECK(contains(gcd.out, "gcd_B is gcd_A[rem <- remainder_sub]: yes"));

  auto b = cli({"demo", "booleans"});
  CHECK(b.code == 0);
  for (const auto* m : {"not", "read0", "read1", "and"}) CHECK(contains(b.out, std::string("  ") + m + "  PASS"));

  auto m = cli({"demo", "mergesort"});
  CHECK(m.code == 0);
  CHECK(contains(m.out, "[1,2,3,4,5,6,7,8]"));

  CHECK(cli({"demo", "census"}).code == 0);
  CHECK(cli({"demo", "nothing"}).code == 1);
}

TEST_CASE("emitted files re-parse to equal objects") {
  auto a = scratch("gcd_a.json");
  auto p = scratch("glued.json");
  auto phi = scratch("phi.json");
  Workspace ws;
  write_text_file(a, write_algorithm(ws.algorithm("builtin:gcd_A")));
  LabellingDocument doc{"programs", "", {}};
  for (const auto& [label, name] : std::vector<std::pair<std::string, std::string>>{
           {"y=0", "gcd_y0"}, {"y!=0", "gcd_yS"}, {"return x", "gcd_return"}, {"y=x mod y; x=y", "gcd_step"}}) {
    auto file = scratch(name + ".json");
    write_text_file(file, write_program(ws.program("builtin:" + name)));
    doc.map[label] = name + ".json";
  }
  write_text_file(phi, write_labelling(doc));

  CHECK(cli({"glue", "--algorithm", a, "--labelling", phi, "--out", p}).code == 0);
  auto glued = read_program(read_text_file(p));
  CHECK(glued == glue(corpus::gcd_A().syntax, corpus::gcd_programs()).program);
  CHECK(write_program(glued) == read_text_file(p));
  CHECK(cli({"check-implements", "--program", p, "--algorithm", a, "--labelling", phi}).code == 0);
  CHECK(cli({"check-implements", "--program", "tm_not", "--algorithm", a, "--labelling", phi}).code == 2);
  auto run = cli({"run", "--program", p, "--input", "{x: 18, y: 12}"});
  CHECK(contains(run.out, "final: {x: 6, y: 0, w: 0}"));

  auto sc = cli({"succinct-check", "--program", p, "--algorithm", a, "--labelling", phi, "--f", "n/2"});
  CHECK(sc.code == 0);
  CHECK(contains(sc.out, "size(P) = 35, size(A) = 8, f(size(P)) = 17"));
  auto found = scratch("found.json");
  CHECK(cli({"succinct-find", "--program", p, "--library", phi, "--out", found}).code == 0);
  CHECK(read_algorithm(read_text_file(found)).syntax.graph.edges.size() == 4);

  auto u = scratch("unfolded.json");
  CHECK(cli({"unfold", "--algorithm", "mergesort_ab", "--label", "sort", "--depth", "2", "--out", u}).code == 0);
  auto udoc = read_algorithm(read_text_file(u));
  CHECK(write_algorithm(udoc) == read_text_file(u));
  auto sorted = cli({"run", "--algorithm", u, "--input", "{x: [3, 1, 2]}"});
  CHECK(contains(sorted.out, "x: [1,2,3]"));

  auto inst = scratch("inst.json");
  CHECK(cli({"instantiate", "--algorithm", "gcd_logical", "--structure", "gf2poly", "--out", inst}).code == 0);
  auto idoc = read_algorithm(read_text_file(inst));
  CHECK(idoc.structure == "gf2poly");
  CHECK(write_algorithm(idoc) == read_text_file(inst));

  auto csv = scratch("stats.csv");
  CHECK(cli({"census", "--n", "5", "--f", "n/2", "--out", csv}).code == 0);
  auto first = read_text_file(csv);
  CHECK(cli({"census", "--n", "5", "--f", "n/2", "--out", csv}).code == 0);
  CHECK(read_text_file(csv) == first);
  CHECK(first.rfind("n,programs_enumerated,succinct_count,fraction\n", 0) == 0);

  auto dot = cli({"dot", "--algorithm", "gcd_A"});
  CHECK(dot.code == 0);
  CHECK(contains(dot.out, "digraph \"A\""));
}

TEST_CASE("verification commands") {
  auto m = scratch("manifest.json");
  write_text_file(m, write_manifest({"delta_bool", "booleans", {{"not", "builtin:tm_not"}, {"and", "builtin:tm_and"}}}));
  auto ok = cli({"verify-impl", "--manifest", m, "--samples", "50", "--budget", "100000"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "not: PASS"));
  write_text_file(m, write_manifest({"delta_bool", "booleans", {{"not", "builtin:tm_id"}}}));
  auto bad = cli({"verify-impl", "--manifest", m});
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "not: FAIL"));

  CHECK(cli({"check-model", "--structure", "naturals"}).code == 0);
  CHECK(cli({"--json", "check-model", "--structure", "gf2poly", "--samples", "100"}).code == 0);
  CHECK(cli({"check-model", "--structure", "reals"}).code == 1);
}

TEST_CASE("recursive function evaluation") {
  auto r = cli({"eval-recfun", "--term", "(primrec (proj 1 1) (comp succ (proj 2 3)))", "--args", "3,4"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
  CHECK(cli({"eval-recfun", "--term", "mult", "--args", "6,7"}).out == "42\n");
  CHECK(cli({"--budget", "100", "eval-recfun", "--term", "(mu (comp succ (zero 1)))"}).code == 3);
  CHECK(cli({"eval-recfun", "--term", "add", "--args", "1"}).code == 1);
}

TEST_CASE("list") {
  auto r = cli({"list"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "gcd_A"));
  CHECK(contains(r.out, "tm_succ_unary"));
}
