#include <doctest.h>

#include "algoglue/algorithms.hpp"
#include "algoglue/data_structures.hpp"
#include "algoglue/error.hpp"
#include "algoglue/recfun.hpp"

using namespace algoglue;

namespace {

Value n(std::uint64_t v) { return Value::nat(v); }
Value l(Value::List v) { return Value::list(std::move(v)); }

std::optional<Tuple> apply(const AbstractDataStructure& s, const std::string& map, Tuple args) {
  return s.map(map).apply(args);
}

}  // namespace

TEST_CASE("booleans") {
  auto b = booleans();
  for (std::uint64_t m = 0; m <= 1; ++m) {
    CHECK(*apply(*b, "not", {n(m)}) == Tuple{n(1 - m)});
    CHECK(apply(*b, "read0", {n(m)}).has_value() == (m == 0));
    CHECK(apply(*b, "read1", {n(m)}).has_value() == (m == 1));
    for (std::uint64_t k = 0; k <= 1; ++k) {
      CHECK(*apply(*b, "and", {n(m), n(k)}) == Tuple{n(m && k)});
      CHECK(*apply(*b, "or", {n(m), n(k)}) == Tuple{n(m || k)});
    }
  }
  CHECK(maximal_arity(*b) == 2);
  CHECK(b->disjoint("read0", "read1"));
}

TEST_CASE("naturals") {
  auto s = naturals();
  CHECK(*apply(*s, "succ", {n(3)}) == Tuple{n(4)});
  CHECK_FALSE(apply(*s, "pred", {n(0)}).has_value());
  CHECK(*apply(*s, "mod", {n(12), n(8)}) == Tuple{n(4)});
  CHECK_FALSE(apply(*s, "mod", {n(12), n(0)}).has_value());
  CHECK_FALSE(apply(*s, "sub", {n(0), n(1)}).has_value());
  CHECK(*apply(*s, "swap", {n(1), n(2)}) == Tuple{n(2), n(1)});
  CHECK(maximal_arity(*naturals_basic()) == 1);
  CHECK(maximal_arity(AbstractDataStructure("empty", naturals()->domain())) == 0);
  CHECK_THROWS_AS(s->map("sqrt"), Error);
  CHECK_THROWS_AS(apply(*s, "succ", {n(1), n(2)}), Error);
}

TEST_CASE("lists") {
  auto s = lists_of_naturals();
  CHECK(*apply(*s, "split", {l({5, 3, 8, 1})}) == Tuple{l({5, 8}), l({3, 1})});
  CHECK_FALSE(apply(*s, "fst", {l({})}).has_value());
  CHECK(*apply(*s, "fst", {l({4, 2})}) == Tuple{l({4})});
  CHECK(*apply(*s, "concat", {l({1}), l({2, 3})}) == Tuple{l({1, 2, 3})});
  CHECK(*apply(*s, "sort", {l({3, 1, 2})}) == Tuple{l({1, 2, 3})});
}

TEST_CASE("gf2 polynomials") {
  auto s = gf2_polynomials();
  // (x^2 + 1) = (x + 1)^2
  CHECK(*apply(*s, "mult", {n(0b11), n(0b11)}) == Tuple{n(0b101)});
  CHECK(*apply(*s, "mod", {n(0b101), n(0b11)}) == Tuple{n(0)});
  CHECK(*apply(*s, "div", {n(0b101), n(0b11)}) == Tuple{n(0b11)});
  CHECK(gf2::render(0b1011) == "x^3+x+1");
  CHECK(gf2::parse("x^3+x+1") == 0b1011);
}

TEST_CASE("anchored operations") {
  auto s = naturals();
  auto pred = s->anchor("pred", {"x"}, {"x"});
  CHECK(pred.name() == "pred@(x)->(x)");
  Environment env{{"x", n(0)}, {"y", n(5)}};
  CHECK_FALSE(pred.apply(env).has_value());
  auto mod = s->anchor("mod", {"x", "y"}, {"x"});
  env = Environment{{"x", n(17)}, {"y", n(5)}};
  auto r = mod.apply(env);
  REQUIRE(r);
  CHECK(r->get("x") == n(2));
  CHECK(r->get("y") == n(5));
  CHECK_THROWS_AS(s->anchor("mod", {"x"}, {"x"}), Error);

  auto a = parse_anchor_name("mod@(x,y)->(y)");
  CHECK(a.map == "mod");
  CHECK(a.inputs == std::vector<std::string>{"x", "y"});
  CHECK(a.outputs == std::vector<std::string>{"y"});
}

TEST_CASE("anchored application leaves other variables alone") {
  auto s = naturals();
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    Environment env;
    for (const auto* v : {"x", "y", "z"}) env.set(v, n(rng() % 20));
    for (const auto& m : s->maps()) {
      if (m.dom == 0 && m.im == 0) continue;
      std::vector<std::string> in, out;
      const char* vars[] = {"x", "y", "z"};
      for (std::size_t i = 0; i < m.dom; ++i) in.push_back(vars[i]);
      for (std::size_t i = 0; i < m.im; ++i) out.push_back(vars[(i + 1) % 3]);
      AnchoredOperation op(m, in, out);
      Tuple args;
      for (const auto& v : in) args.push_back(env.get(v));
      auto direct = m.apply(args);
      auto r = op.apply(env);
      REQUIRE(r.has_value() == direct.has_value());
      if (!r) continue;
      for (const auto* v : vars) {
        auto pos = std::find(out.begin(), out.end(), v);
        if (pos == out.end())
          CHECK(r->get(v) == env.get(v));
        else
          CHECK(r->get(v) == (*direct)[static_cast<std::size_t>(pos - out.begin())]);
      }
    }
  }
}

TEST_CASE("composite maps") {
  auto s = naturals();
  auto step = compose_maps("euclid_step", {"x", "y", "r"}, {"x", "y"}, {"x", "y"},
                           {s->anchor("mod", {"x", "y"}, {"r"}), s->anchor("swap", {"x", "y"}, {"x", "y"}),
                            s->anchor("swap", {"y", "r"}, {"y", "r"})});
  CHECK(*step.apply(Tuple{n(12), n(8)}) == Tuple{n(8), n(4)});
  CHECK_FALSE(step.apply(Tuple{n(12), n(0)}).has_value());

  auto id = compose_maps("nothing", {"x", "y"}, {});
  CHECK(id.dom == 2);
  CHECK(*id.apply(Tuple{n(3), n(9)}) == Tuple{n(3), n(9)});

  auto down = compose_maps("down", {"x"}, {s->anchor("pred", {"x"}, {"x"}), s->anchor("pred", {"x"}, {"x"})});
  CHECK(*down.apply(Tuple{n(2)}) == Tuple{n(0)});
  CHECK_FALSE(down.apply(Tuple{n(1)}).has_value());

  CHECK_THROWS_AS(compose_maps("escape", {"x"}, {s->anchor("pred", {"q"}, {"q"})}), Error);
  CHECK_FALSE(bottom_map().apply(Tuple{}).has_value());
}

TEST_CASE("product structures") {
  auto b = booleans();
  auto nat = naturals();
  auto p = product(*b, *nat);
  CHECK(p->maps().size() == b->maps().size() + nat->maps().size());
  CHECK(maximal_arity(*p) == std::max(maximal_arity(*b), maximal_arity(*nat)));
  auto pair = [](std::uint64_t a, std::uint64_t c) { return Value::tuple({n(a), n(c)}); };
  CHECK(*p->map("left.not").apply(Tuple{pair(1, 5)}) == Tuple{pair(0, 5)});
  CHECK(*p->map("right.succ").apply(Tuple{pair(1, 5)}) == Tuple{pair(1, 6)});
  CHECK(p->disjoint("left.read0", "left.read1"));

  AbstractDataStructure empty("empty", b->domain());
  auto q = product(*nat, empty);
  CHECK(q->maps().size() == nat->maps().size());

  // Independent components commute.
  for (std::uint64_t a = 0; a <= 1; ++a)
    for (std::uint64_t c = 0; c <= 6; ++c)
      for (const auto* ln : {"left.not", "left.read0", "left.read1"})
        for (const auto* rn : {"right.succ", "right.pred", "right.read0", "right.readS"}) {
          auto x = Tuple{pair(a, c)};
          auto lr = p->map(ln).apply(x);
          auto rl = p->map(rn).apply(x);
          if (!lr || !rl) continue;
          auto one = p->map(rn).apply(*lr);
          auto two = p->map(ln).apply(*rl);
          REQUIRE(one.has_value() == two.has_value());
          if (one) CHECK(*one == *two);
        }
}

TEST_CASE("induced model") {
  auto s = naturals();
  auto swap = s->anchor("swap", {"x", "y"}, {"x", "y"});
  auto mod = s->anchor("mod", {"x", "y"}, {"y"});
  auto id = s->anchor("id", {"x"}, {"x"});
  auto readS = s->anchor("readS", {"y"}, {"y"});
  auto m = induced_model(*s, {"x", "y"}, {swap, mod, id, readS});
  CHECK(m.name() == "naturals[x,y]");
  Environment env{{"x", n(12)}, {"y", n(8)}};
  std::vector<std::string> word = {swap.name(), mod.name()};
  auto r = m.apply_word(word, env);
  REQUIRE(r);
  CHECK(std::get<Environment>(*r) == Environment{{"x", n(8)}, {"y", n(8)}});
  std::vector<std::string> other = {mod.name(), swap.name()};
  CHECK(std::get<Environment>(*m.apply_word(other, env)) == Environment{{"x", n(4)}, {"y", n(12)}});
  CHECK(std::get<Environment>(*m.apply(id.name(), env)) == env);
  CHECK_FALSE(m.apply(readS.name(), Environment{{"x", n(1)}, {"y", n(0)}}).has_value());
  CHECK_THROWS_AS(induced_model(*s, {"x"}, {swap}), Error);
}

TEST_CASE("recursive functions") {
  std::vector<std::uint64_t> args = {3, 4};
  auto add = eval_recfun(addition_term(), args, 100000);
  REQUIRE(add.ok());
  CHECK(add.value == 7);
  CHECK(addition_term().str() == "(primrec (proj 1 1) (comp succ (proj 2 3)))");
  CHECK(parse_recfun(addition_term().str()).str() == addition_term().str());

  std::vector<std::uint64_t> three = {9, 8, 7};
  CHECK(eval_recfun(RecFunTerm::proj(2, 3), three, 10).value == 8);

  auto one = RecFunTerm::comp(RecFunTerm::succ(), {RecFunTerm::zero(1)});
  std::vector<std::uint64_t> none;
  auto mu = eval_recfun(RecFunTerm::mu(one), none, 5000);
  CHECK(mu.status == RecFunResult::Status::OutOfBudget);

  for (std::uint64_t a = 0; a <= 30; ++a)
    for (std::uint64_t b = 0; b <= 30; ++b) {
      std::vector<std::uint64_t> ab = {a, b};
      auto s = eval_recfun(addition_term(), ab, 1000000);
      auto p = eval_recfun(multiplication_term(), ab, 1000000);
      REQUIRE(s.ok());
      REQUIRE(p.ok());
      CHECK(s.value == a + b);
      CHECK(p.value == a * b);
    }

  CHECK_THROWS_AS(RecFunTerm::comp(RecFunTerm::succ(), {}), Error);
  CHECK_THROWS_AS(parse_recfun("(proj 4 3)"), Error);
  CHECK_THROWS_AS(parse_recfun("(primrec"), Error);
}

TEST_CASE("recursive functions as a structure") {
  auto s = recursive_functions(100000);
  CHECK(*s->map("add").apply(Tuple{n(2), n(2)}) == Tuple{n(4)});
  CHECK(*s->map("zero").apply(Tuple{}) == Tuple{n(0)});
  auto one = RecFunTerm::comp(RecFunTerm::succ(), {RecFunTerm::zero(1)});
  auto mu = wrap_recfun(RecFunTerm::mu(one), "never", 1000);
  CHECK_FALSE(mu.apply(Tuple{}).has_value());
}
