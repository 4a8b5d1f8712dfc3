#include <doctest.h>

#include <filesystem>

#include "algoglue/corpus.hpp"
#include "algoglue/error.hpp"
#include "algoglue/io.hpp"

using namespace algoglue;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "algoglue_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("program files") {
  const auto& p = builtin_tm_programs().at("tm_not").program;
  auto text = write_program(p);
  CHECK(text.rfind("{\n  \"model\": \"tm\",\n  \"states\": [", 0) == 0);
  CHECK(text.find("\"from\": \"i\"") != std::string::npos);
  CHECK(read_program(text) == p);
  CHECK(write_program(read_program(text)) == text);

  CHECK_THROWS_AS(read_program("{"), Error);
  CHECK_THROWS_AS(read_program(R"({"model": "tm", "states": ["i"], "initial": "i", "terminal": "t", "edges": []})"),
                  Error);
  CHECK_THROWS_AS(read_program(R"({"model": "tm", "states": ["i", "i"], "initial": "i", "terminal": "i", "edges": []})"),
                  Error);
}

TEST_CASE("algorithm files round-trip") {
  Workspace ws;
  for (const auto& name : ws.builtin_algorithms()) {
    CAPTURE(name);
    auto doc = ws.algorithm("builtin:" + name);
    auto text = write_algorithm(doc);
    auto back = read_algorithm(text);
    CHECK(back == doc);
    CHECK(write_algorithm(back) == text);
  }
  auto doc = read_algorithm(write_algorithm(document(corpus::gcd_A())));
  auto a = ws.semantic(doc);
  auto t = abstract_run(a, parse_environment("{x: 12, y: 8}"), 100);
  CHECK(std::get<Environment>(t.last().configuration).get("x") == Value::nat(4));
}

TEST_CASE("composite meanings survive a round trip") {
  Workspace ws;
  auto u = unfold(corpus::mergesort(corpus::SortOrder::AB), "sort", 2);
  auto text = write_algorithm(document(u));
  auto back = ws.semantic(read_algorithm(text));
  CHECK(back.syntax == u.syntax);
  Environment env;
  env.set("x", Value::list({4, 1, 3}));
  auto t = abstract_run(back, env, 10000);
  CHECK(std::get<Environment>(t.last().configuration).get("x") == Value::list({1, 3, 4}));
}

TEST_CASE("logical algorithm files") {
  Workspace ws;
  auto doc = ws.algorithm("builtin:gcd_logical");
  auto text = write_algorithm(doc);
  CHECK(text.find("\"theory\": \"builtin:euclidean\"") != std::string::npos);
  auto logical = ws.logical(read_algorithm(text));
  auto sem = instantiate(logical, naturals(), euclidean_binding());
  auto t = abstract_run(sem, parse_environment("{x: 21, y: 6}"), 100);
  CHECK(std::get<Environment>(t.last().configuration).get("x") == Value::nat(3));

  auto theory_file = scratch("euclid.theory");
  write_text_file(theory_file, euclidean_theory_text());
  auto t2 = ws.theory(theory_file.string());
  CHECK(t2->sentences.size() == euclidean_theory().sentences.size());
}

TEST_CASE("labelling, manifest and binding files") {
  LabellingDocument l{"programs", "tm", {{"o", "a.json"}, {"p", "builtin:tm_not"}}};
  CHECK(read_labelling(write_labelling(l)) == l);
  CHECK_THROWS_AS(read_labelling(R"({"targets": "maps", "map": {}})"), Error);
  ManifestDocument m{"delta_bool", "booleans", {{"not", "not.json"}}};
  CHECK(read_manifest(write_manifest(m)) == m);
  CHECK(read_binding(write_binding(euclidean_binding())) == euclidean_binding());
}

TEST_CASE("workspace resolves files relative to the labelling") {
  Workspace ws;
  auto dir = scratch("");
  write_text_file(dir / "not.json", write_program(builtin_tm_programs().at("tm_not").program));
  write_text_file(dir / "phi.json", write_labelling({"programs", "", {{"o", "not.json"}}}));
  auto phi = ws.program_labelling((dir / "phi.json").string());
  CHECK(phi.model == "tm");
  CHECK(phi.map.at("o") == builtin_tm_programs().at("tm_not").program);

  write_text_file(dir / "m.json", write_manifest({"delta_bool", "booleans", {{"not", "not.json"}}}));
  std::string s;
  auto impl = ws.manifest((dir / "m.json").string(), &s);
  CHECK(s == "booleans");
  CHECK(impl.programs.size() == 1);

  CHECK_THROWS_AS(ws.program("builtin:nothing"), Error);
  CHECK_THROWS_AS(ws.program("no_such_file.json"), Error);
  CHECK(ws.program("tm_not") == builtin_tm_programs().at("tm_not").program);
}

TEST_CASE("induced models from program files") {
  Workspace ws;
  auto p = ws.program("builtin:gcd_glued");
  auto m = ws.model_for(p);
  CHECK(m.name() == "naturals[x,y,w]");
  auto t = run(m, p, parse_environment("{x: 12, y: 8, w: 0}"), 10000);
  CHECK(std::get<Environment>(t.last().configuration).get("x") == Value::nat(4));

  auto view = program_view(corpus::gcd_A());
  auto vm = ws.model_for(view);
  auto r = run(vm, view, parse_environment("{x: 9, y: 6}"), 100);
  CHECK(std::get<Environment>(r.last().configuration).get("x") == Value::nat(3));

  Program unknown = p;
  unknown.model = "reals[x]";
  CHECK_THROWS_AS(ws.model_for(unknown), Error);
}
