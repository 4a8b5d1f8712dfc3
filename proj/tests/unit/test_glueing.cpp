#include <doctest.h>

#include <numeric>

#include "algoglue/corpus.hpp"
#include "algoglue/error.hpp"
#include "algoglue/glueing.hpp"
#include "algoglue/io.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace algoglue;

namespace {

Program chain(const std::vector<std::string>& labels) {
  Program p;
  p.model = "tm";
  p.graph.initial = p.graph.add_state("i");
  for (std::size_t k = 1; k < labels.size(); ++k) p.graph.add_state("m" + std::to_string(k));
  p.graph.terminal = p.graph.add_state("t");
  for (std::size_t k = 0; k < labels.size(); ++k) {
    int from = static_cast<int>(k) == 0 ? p.graph.initial : static_cast<int>(k);
    int to = k + 1 == labels.size() ? p.graph.terminal : static_cast<int>(k + 1);
    p.graph.add_edge(from, to, labels[k]);
  }
  return p;
}

SyntacticAlgorithm algorithm(std::vector<std::string> states, std::vector<std::tuple<std::string, std::string, std::string>> edges,
                             const std::string& initial, const std::string& terminal) {
  ControlGraph g;
  for (auto& s : states) g.add_state(s);
  g.initial = g.state(initial);
  g.terminal = g.state(terminal);
  for (auto& [a, b, l] : edges) g.add_edge(a, b, l);
  return make_syntactic(std::move(g));
}

std::size_t expected_states(const SyntacticAlgorithm& a, const ProgramLabelling& phi) {
  std::size_t n = a.graph.states.size();
  for (const auto& e : a.graph.edges) n += phi.map.at(e.label).graph.states.size() - 2;
  return n;
}

std::size_t expected_edges(const SyntacticAlgorithm& a, const ProgramLabelling& phi) {
  std::size_t n = 0;
  for (const auto& e : a.graph.edges) n += phi.map.at(e.label).graph.edges.size();
  return n;
}

ControlGraph renamed(const ControlGraph& g, const std::vector<int>& perm) {
  ControlGraph h;
  h.states.resize(g.states.size());
  for (std::size_t s = 0; s < g.states.size(); ++s) h.states[static_cast<std::size_t>(perm[s])] = "r" + g.states[s];
  h.initial = perm[static_cast<std::size_t>(g.initial)];
  h.terminal = perm[static_cast<std::size_t>(g.terminal)];
  for (auto it = g.edges.rbegin(); it != g.edges.rend(); ++it)
    h.add_edge(perm[static_cast<std::size_t>(it->from)], perm[static_cast<std::size_t>(it->to)], it->label);
  return h;
}

}  // namespace

TEST_CASE("preglue") {
  auto a = algorithm({"i", "m", "t"}, {{"i", "m", "o"}, {"m", "m", "o"}, {"m", "t", "o"}}, "i", "t");
  ProgramLabelling phi{"tm", {{"o", chain({"right"})}}};
  auto copies = preglue(a, phi);
  REQUIRE(copies.size() == 3);
  std::size_t states = 0, edges = 0;
  for (const auto& c : copies) {
    states += c.states.size();
    edges += c.edges.size();
  }
  CHECK(states == 6);
  CHECK(edges == 3);
  CHECK(copies[1].states[0] == "e1:i");

  auto empty = algorithm({"i", "t"}, {}, "i", "t");
  CHECK(preglue(empty, phi).empty());
}

TEST_CASE("glueing four edges over three labels") {
  // Two edges share label c, so that component appears twice.
  auto a = algorithm({"u", "v", "w", "z"}, {{"u", "v", "a"}, {"v", "w", "b"}, {"w", "v", "c"}, {"v", "z", "c"}}, "u", "z");
  ProgramLabelling phi{"tm",
                       {{"a", chain({"write_1", "right"})},
                        {"b", chain({"read_1"})},
                        {"c", chain({"left", "read_0", "write_1"})}}};
  CHECK(preglue(a, phi).size() == 4);
  GlueTrace trace;
  auto g = glue_graph(a.graph, [&](std::size_t e) -> const ControlGraph& { return phi.map.at(a.graph.edges[e].label).graph; }, &trace);
  CHECK(g.states.size() == expected_states(a, phi));
  CHECK(g.edges.size() == expected_edges(a, phi));
  CHECK(trace.states.size() == g.states.size());
  CHECK(trace.edges.size() == g.edges.size());

  auto p = glue(a, phi).program;
  auto v = check_implements(p, a, phi);
  CHECK(v.implements);
  REQUIRE(v.witness);
  CHECK(is_isomorphism(glue(a, phi).program.graph, p.graph, *v.witness));
}

TEST_CASE("basic glueings") {
  auto single = single_edge("o");
  auto q = chain({"write_1", "right", "read_*"});
  ProgramLabelling phi{"tm", {{"o", q}}};
  CHECK(graph_isomorphic(glue(single, phi).program.graph, q.graph).has_value());

  auto two = algorithm({"i", "m", "t"}, {{"i", "m", "o"}, {"m", "t", "o"}}, "i", "t");
  ProgramLabelling one{"tm", {{"o", chain({"right"})}}};
  auto g = glue(two, one).program;
  CHECK(g.graph.states.size() == 3);
  CHECK(g.graph.edges.size() == 2);

  CHECK_THROWS_AS(glue(two, ProgramLabelling{"tm", {}}), Error);
  Program loop;
  loop.model = "tm";
  loop.graph.initial = loop.graph.terminal = loop.graph.add_state("s");
  CHECK_THROWS_AS(glue(two, ProgramLabelling{"tm", {{"o", loop}}}), Error);
}

TEST_CASE("glued gcd program") {
  auto a = corpus::gcd_A();
  auto phi = corpus::gcd_programs();
  auto p = glue(a.syntax, phi).program;
  auto model = corpus::gcd_program_model();
  CHECK(check_local_determinism(model, p).clean());
  for (std::uint64_t x = 0; x <= 15; ++x)
    for (std::uint64_t y = 0; y <= 15; ++y) {
      Environment env{{"x", Value::nat(x)}, {"y", Value::nat(y)}, {"w", Value::nat(0)}};
      auto t = run(model, p, env, 100000);
      REQUIRE(t.outcome == Outcome::Terminated);
      auto abstract = abstract_run(a, Environment{{"x", Value::nat(x)}, {"y", Value::nat(y)}}, 1000);
      auto got = std::get<Environment>(t.last().configuration);
      auto want = std::get<Environment>(abstract.last().configuration);
      CHECK(got.get("x") == want.get("x"));
      CHECK(got.get("y") == want.get("y"));
      CHECK(got.get("x") == Value::nat(oracle::euclid(x, y)));
    }
}

TEST_CASE("algorithm glueing") {
  auto free = corpus::gcd_A_free();
  Workspace ws;
  auto phi = ws.algorithm_labelling("builtin:gcd_remainder");
  auto glued = glue_alg(free.syntax, phi);
  CHECK(graph_isomorphic(glued.graph, corpus::gcd_B().syntax.graph).has_value());

  auto single = single_edge("o");
  auto rem = corpus::remainder_sub().syntax;
  CHECK(graph_isomorphic(glue_alg(single, AlgorithmLabelling{{"o", rem}}).graph, rem.graph).has_value());

  // Label multiset of the result is the union of the components' edge labels.
  std::map<std::string, int> want, got;
  for (const auto& e : free.syntax.graph.edges)
    for (const auto& f : phi.at(e.label).graph.edges) ++want[f.label];
  for (const auto& e : glued.graph.edges) ++got[e.label];
  CHECK(want == got);

  SemanticLabelling sphi;
  for (const auto& l : free.syntax.labels) {
    if (l == "rem") {
      sphi[l] = corpus::remainder_sub();
    } else {
      sphi[l] = SemanticAlgorithm{single_edge(l), free.structure, free.frame, {{l, free.meaning.at(l)}}};
    }
  }
  auto sem = glue_alg(free.syntax, sphi);
  for (std::uint64_t x = 0; x <= 12; ++x)
    for (std::uint64_t y = 0; y <= 12; ++y) {
      auto t = abstract_run(sem, Environment{{"x", Value::nat(x)}, {"y", Value::nat(y)}}, 10000);
      REQUIRE(t.outcome == Outcome::Terminated);
      CHECK(std::get<Environment>(t.last().configuration).get("x") == Value::nat(oracle::euclid(x, y)));
    }
}

TEST_CASE("check_implements") {
  auto a = algorithm({"i", "m", "t"}, {{"i", "m", "o"}, {"m", "t", "p"}}, "i", "t");
  ProgramLabelling phi{"tm", {{"o", chain({"right", "right"})}, {"p", chain({"read_1"})}}};
  auto p = glue(a, phi).program;
  CHECK(check_implements(p, a, phi).implements);
  auto extra = p;
  extra.graph.add_state("orphan");
  CHECK_FALSE(check_implements(extra, a, phi).implements);
  auto other = p;
  other.model = "naturals[x]";
  CHECK_FALSE(check_implements(other, a, phi).implements);
}

TEST_CASE("search_implementation") {
  auto a = algorithm({"i", "m", "t"}, {{"i", "m", "o"}, {"m", "t", "p"}}, "i", "t");
  ProgramLabelling phi{"tm", {{"o", chain({"right", "write_0"})}, {"p", chain({"read_1"})}}};
  auto p = glue(a, phi).program;
  std::vector<std::pair<std::string, Program>> lib = {
      {"w", chain({"write_1"})}, {"p", phi.map.at("p")}, {"o", phi.map.at("o")}, {"x", chain({"left"})}};
  auto found = search_implementation(p, a, lib, 1000);
  REQUIRE(found);
  CHECK(check_implements(p, a, *found).implements);
  CHECK_FALSE(search_implementation(p, a, {}, 1000).has_value());

  auto single = chain({"write_1"});
  auto s = search_implementation(single, single_edge("o"), lib, 100);
  REQUIRE(s);
  CHECK(s->map.at("o") == lib[0].second);
}

TEST_CASE("coherence") {
  auto b = booleans();
  SemanticAlgorithm alg{single_edge("not"), b, {"v"}, {{"not", b->anchor("not", {"v"}, {"v"})}}};
  const auto& progs = builtin_tm_programs();
  ProgramLabelling good{"tm", {{"not", progs.at("tm_not").program}}};
  CHECK(check_coherent(good, alg, tm_model(), delta_bool(), 10, 1000).coherent());
  ProgramLabelling bad{"tm", {{"not", progs.at("tm_id").program}}};
  auto r = check_coherent(bad, alg, tm_model(), delta_bool(), 10, 1000);
  CHECK_FALSE(r.coherent());
  REQUIRE(r.labels.at("not").witness);
  CHECK(r.labels.at("not").witness->input == Tuple{Value::nat(0)});

  SemanticAlgorithm none{algorithm({"i", "t"}, {}, "i", "t"), b, {"v"}, {}};
  CHECK(check_coherent(ProgramLabelling{"tm", {}}, none, tm_model(), delta_bool(), 10, 1000).coherent());
}

TEST_CASE("composing labellings") {
  auto free = corpus::gcd_A_free();
  Workspace ws;
  auto phi = ws.algorithm_labelling("builtin:gcd_remainder");
  // Primitive programs over naturals[x,y,w], one per gcd_B label.
  auto b = corpus::gcd_B();
  ProgramLabelling psi;
  psi.model = "naturals[x,y,w]";
  for (const auto& l : b.syntax.labels) {
    Program p;
    p.model = psi.model;
    p.graph.initial = p.graph.add_state("i");
    p.graph.terminal = p.graph.add_state("t");
    p.graph.add_edge(0, 1, b.meaning.at(l).name());
    psi.map[l] = p;
  }
  auto theta = compose_labellings(free.syntax, phi, psi);
  auto lhs = glue(free.syntax, theta).program;
  auto rhs = glue(b.syntax, psi).program;
  CHECK(graph_isomorphic(lhs.graph, rhs.graph).has_value());

  // With single-edge components theta is psi up to renaming.
  AlgorithmLabelling trivial;
  for (const auto& l : b.syntax.labels) trivial[l] = single_edge(l);
  auto same = compose_labellings(b.syntax, trivial, psi);
  for (const auto& [l, p] : psi.map) CHECK(graph_isomorphic(same.map.at(l).graph, p.graph).has_value());
}

TEST_CASE("two-level glueing is associative") {
  auto outer = algorithm({"i", "t"}, {{"i", "t", "top"}}, "i", "t");
  auto middle = algorithm({"a", "b", "c"}, {{"a", "b", "mid"}, {"b", "c", "mid"}}, "a", "c");
  auto inner = algorithm({"x", "y", "z"}, {{"x", "y", "low"}, {"y", "z", "low"}}, "x", "z");
  ProgramLabelling psi{"tm", {{"low", chain({"right"})}}};
  AlgorithmLabelling phi1{{"top", middle}};
  AlgorithmLabelling phi2{{"mid", inner}};
  auto left = glue(glue_alg(glue_alg(outer, phi1), phi2), psi).program;
  auto right = glue(outer, compose_labellings(outer, phi1, compose_labellings(middle, phi2, psi))).program;
  CHECK(left.graph.edges.size() == 4);
  CHECK(graph_isomorphic(left.graph, right.graph).has_value());
}

TEST_CASE("syntactic unfolding") {
  auto rec = algorithm({"i", "m", "t"}, {{"i", "m", "f"}, {"m", "t", "f"}, {"i", "t", "base"}}, "i", "t");
  auto u0 = unfold(rec, "f", 0);
  for (const auto& e : u0.graph.edges) CHECK(e.label != "f");
  CHECK(std::count_if(u0.graph.edges.begin(), u0.graph.edges.end(),
                      [](const Edge& e) { return e.label == kBottomLabel; }) == 2);
  std::size_t last = 0;
  for (int d = 0; d <= 3; ++d) {
    auto u = unfold(rec, "f", d);
    CHECK(u.graph.states.size() > last);
    last = u.graph.states.size();
  }
}

TEST_CASE("semantic unfolding of mergesort") {
  testgen::Rng rng(5);
  std::size_t last = 0;
  for (int d = 0; d <= 2; ++d) {
    auto u = unfold(corpus::mergesort(corpus::SortOrder::AB), "sort", d);
    CHECK(u.syntax.graph.states.size() > last);
    last = u.syntax.graph.states.size();
  }
  for (int d = 1; d <= 4; ++d) {
    auto u = unfold(corpus::mergesort(corpus::SortOrder::AB), "sort", d);
    std::size_t longest = std::size_t{1} << (d - 1);
    for (int k = 0; k < 10; ++k) {
      Value::List items;
      for (int i = testgen::uniform(rng, 0, static_cast<int>(longest)); i > 0; --i)
        items.push_back(static_cast<std::uint64_t>(testgen::uniform(rng, 0, 50)));
      Environment env;
      env.set("x", Value::list(items));
      auto t = abstract_run(u, env, 100000);
      REQUIRE(t.outcome == Outcome::Terminated);
      CHECK(std::get<Environment>(t.last().configuration).get("x").as_list() == oracle::sorted(items));
    }
  }
  // A composite label calling the recursive map cannot be unfolded.
  CHECK_THROWS_AS(unfold(corpus::mergesort(corpus::SortOrder::Free), "sort", 2), Error);
}

TEST_CASE("isomorphism is an equivalence") {
  testgen::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    auto g = testgen::tm_program(rng, 6, 9).graph;
    auto id = graph_isomorphic(g, g);
    REQUIRE(id);
    std::vector<int> perm(g.states.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = renamed(g, perm);
    auto gh = graph_isomorphic(g, h);
    REQUIRE(gh);
    CHECK(is_isomorphism(g, h, *gh));
    CHECK(is_isomorphism(h, g, inverse(*gh)));
    std::shuffle(perm.begin(), perm.end(), rng);
    auto j = renamed(h, perm);
    auto hj = graph_isomorphic(h, j);
    REQUIRE(hj);
    CHECK(is_isomorphism(g, j, compose(*gh, *hj)));
  }
  auto p = chain({"read_0"}).graph;
  auto q = chain({"read_1"}).graph;
  CHECK_FALSE(graph_isomorphic(p, q).has_value());
}

TEST_CASE("glueing counts and round trip on random instances") {
  testgen::Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    auto labels = testgen::label_set("o", testgen::uniform(rng, 1, 4));
    auto a = testgen::algorithm(rng, 5, 6, labels);
    auto phi = testgen::program_labelling(rng, labels, 5, 5);
    auto p = glue(a, phi).program;
    CHECK(p.graph.states.size() == expected_states(a, phi));
    CHECK(p.graph.edges.size() == expected_edges(a, phi));
    CHECK(check_implements(p, a, phi).implements);
  }
}
