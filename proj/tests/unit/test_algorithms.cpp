#include <doctest.h>

#include "algoglue/algorithms.hpp"
#include "algoglue/corpus.hpp"
#include "algoglue/error.hpp"
#include "algoglue/glueing.hpp"
#include "algoglue/logic.hpp"
#include "oracles.hpp"

using namespace algoglue;

namespace {

Value n(std::uint64_t v) { return Value::nat(v); }

Environment final_env(const Trace& t) { return std::get<Environment>(t.last().configuration); }

Environment xy(std::uint64_t x, std::uint64_t y) { return Environment{{"x", n(x)}, {"y", n(y)}}; }

}  // namespace

TEST_CASE("sentences and theories") {
  auto t = parse_theory("t", "(forall (a b) (= (add a b) (add b a)))\n(forall (a) (=> (rel nonzero a) (not (rel iszero a))))");
  REQUIRE(t.sentences.size() == 2);
  CHECK(t.sentences[0].str() == "(forall (a b) (= (add a b) (add b a)))");
  auto sig = t.signature();
  CHECK(sig.functions.at("add") == 2);
  CHECK(sig.relations.at("nonzero") == 1);
  CHECK_THROWS_AS(parse_theory("bad", "(forall (a) (= (add a) (add a a)))").signature(), Error);
  CHECK_THROWS_AS(parse_theory("bad", "(exists (a) (= a a))"), Error);
  CHECK(euclidean_theory().sentences.size() >= 10);
}

TEST_CASE("model checking") {
  auto nat = naturals();
  auto div = parse_theory("div", "(forall (a b) (=> (rel nonzero b) (= a (add (mult (div a b) b) (mod a b)))))");
  CHECK(check_model(*nat, div, euclidean_binding(), 200, 1).ok());

  auto comm = parse_theory("comm", "(forall (a b) (= (add a b) (add b a)))");
  CHECK(check_model(*nat, comm, euclidean_binding(), 200, 1).ok());
  auto wrong = euclidean_binding();
  wrong["add"] = "sub";
  auto r = check_model(*nat, comm, wrong, 200, 1);
  CHECK_FALSE(r.ok());
  REQUIRE(r.sentences[0].counterexample);

  CHECK(check_model(*nat, euclidean_theory(), euclidean_binding(), 200, 1).ok());
  CHECK(check_model(*gf2_polynomials(), euclidean_theory(), euclidean_binding(), 200, 1).ok());

  auto partial = euclidean_binding();
  partial.erase("mod");
  CHECK_THROWS_AS(check_model(*nat, euclidean_theory(), partial, 10, 1), Error);
}

TEST_CASE("counterexamples persist at larger sample sizes") {
  auto nat = naturals();
  auto comm = parse_theory("comm", "(forall (a b) (= (add a b) (add b a)))");
  auto wrong = euclidean_binding();
  wrong["add"] = "sub";
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (std::size_t size : {5, 10, 40}) {
      if (check_model(*nat, comm, wrong, size, seed).ok()) continue;
      for (auto more : {size + 1, size * 2, size * 10}) CHECK_FALSE(check_model(*nat, comm, wrong, more, seed).ok());
    }
  }
}

TEST_CASE("instantiating the logical gcd") {
  auto logical = corpus::gcd_logical();
  auto over_n = instantiate(logical, naturals(), euclidean_binding());
  CHECK(over_n.syntax == logical.syntax);
  for (auto [x, y] : {std::pair<std::uint64_t, std::uint64_t>{12, 8}, {7, 0}, {0, 9}, {35, 14}}) {
    auto t = abstract_run(over_n, xy(x, y), 1000);
    REQUIRE(t.outcome == Outcome::Terminated);
    CHECK(final_env(t).get("x") == n(oracle::euclid(x, y)));
  }

  auto over_p = instantiate(logical, gf2_polynomials(), euclidean_binding());
  CHECK(over_p.syntax == logical.syntax);
  for (auto [x, y] : {std::pair<std::uint64_t, std::uint64_t>{0b1011, 0b11}, {0b110, 0b10}, {0b1111, 0b101}}) {
    auto t = abstract_run(over_p, xy(x, y), 1000);
    REQUIRE(t.outcome == Outcome::Terminated);
    CHECK(final_env(t).get("x") == n(oracle::poly_gcd(x, y)));
  }

  auto wrong = euclidean_binding();
  wrong["add"] = "sub";
  CHECK_THROWS_AS(instantiate(logical, naturals(), wrong), ModelCheckFailure);
}

TEST_CASE("logical algorithms reject unknown symbols") {
  auto a = corpus::gcd_logical();
  a.meaning["y=0"] = {{"iszero", {"y"}, {"y"}}, {"frobnicate", {"y"}, {"y"}}};
  CHECK_THROWS_AS(a.validate(), Error);
}

TEST_CASE("gcd corpus") {
  auto a = corpus::gcd_A();
  CHECK(a.syntax.graph.states.size() == 4);
  CHECK(a.syntax.graph.edges.size() == 4);
  auto b = corpus::gcd_B();
  CHECK(std::count(b.syntax.labels.begin(), b.syntax.labels.end(), "x>=y") == 1);
  CHECK(std::count(b.syntax.labels.begin(), b.syntax.labels.end(), "x<y") == 1);

  auto t = abstract_run(a, xy(12, 8), 1000);
  CHECK(t.outcome == Outcome::Terminated);
  CHECK(final_env(t).get("x") == n(4));
  auto quick = abstract_run(a, xy(7, 0), 1000);
  CHECK(final_env(quick).get("x") == n(7));
  CHECK(quick.steps() == 2);

  auto model = algorithm_model(a);
  auto view = program_view(a);
  for (std::uint64_t x = 0; x < 25; ++x)
    for (std::uint64_t y = 0; y < 25; ++y) {
      for (const auto* alg : {&a, &b}) {
        auto run = abstract_run(*alg, xy(x, y), 10000);
        REQUIRE(run.outcome == Outcome::Terminated);
        CHECK(final_env(run).get("x") == n(oracle::euclid(x, y)));
        auto m = algorithm_model(*alg);
        auto v = program_view(*alg);
        CHECK(replay(m, v, run));
        for (const auto& s : run.states) {
          if (s.control == v.graph.terminal) continue;
          CHECK(step(m, v, s).size() == 1);
        }
      }
    }
  (void)model;
  (void)view;
}

TEST_CASE("mergesort corpus") {
  auto ms = corpus::mergesort();
  CHECK(std::count(ms.syntax.labels.begin(), ms.syntax.labels.end(), corpus::kSortBoth) == 1);
  auto ab = corpus::mergesort(corpus::SortOrder::AB);
  auto u = unfold(ab, "sort", 5);
  Environment env;
  env.set("x", Value::list({5, 3, 8, 1}));
  auto t = abstract_run(u, env, 100000);
  REQUIRE(t.outcome == Outcome::Terminated);
  CHECK(final_env(t).get("x") == Value::list({1, 3, 5, 8}));

  auto merge = corpus::merge_algorithm();
  Environment m{{"x", Value::list({})}, {"a", Value::list({1, 4})}, {"b", Value::list({2, 3, 9})},
                {"y", Value::list({})}};
  auto mt = abstract_run(merge, m, 1000);
  REQUIRE(mt.outcome == Outcome::Terminated);
  CHECK(final_env(mt).get("x") == Value::list({1, 2, 3, 4, 9}));
}

TEST_CASE("algorithm maps") {
  auto f = algorithm_map("gcd", corpus::gcd_A(), {"x", "y"}, {"x"}, 1000);
  CHECK(*f.apply(Tuple{n(12), n(18)}) == Tuple{n(6)});
  auto tight = algorithm_map("gcd", corpus::gcd_A(), {"x", "y"}, {"x"}, 2);
  CHECK_FALSE(tight.apply(Tuple{n(12), n(18)}).has_value());
}

TEST_CASE("semantic validation") {
  auto a = corpus::gcd_A();
  a.meaning.erase("return x");
  CHECK_THROWS_AS(a.validate(), Error);
  auto b = corpus::gcd_A();
  b.frame = {"x"};
  CHECK_THROWS_AS(b.validate(), Error);
}
