#include <doctest.h>

#include <set>

#include "algoglue/error.hpp"
#include "algoglue/representation.hpp"

using namespace algoglue;

namespace {

Value n(std::uint64_t v) { return Value::nat(v); }
Tape enc(const Interpretation& d, Tuple t) { return std::get<Tape>(d(t)); }

ImplementationMap bool_impl(std::initializer_list<std::pair<const char*, const char*>> entries) {
  ImplementationMap impl{delta_bool(), {}};
  for (auto [map, prog] : entries) impl.programs.emplace(map, builtin_tm_programs().at(prog).program);
  return impl;
}

}  // namespace

TEST_CASE("boolean encoding") {
  auto d = delta_bool();
  CHECK(enc(d, {n(1)}) == parse_tape("^1"));
  CHECK(enc(d, {n(1), n(0)}) == parse_tape("^1*0"));
  CHECK(enc(d, {n(0)}) != enc(d, {n(1)}));
  CHECK_THROWS_AS(d(Tuple{n(1), n(1), n(1)}), Error);
}

TEST_CASE("natural number encodings") {
  auto u = delta_nat_unary();
  CHECK(enc(u, {n(3)}) == parse_tape("^111"));
  CHECK(enc(u, {n(2), n(3)}) == parse_tape("^11*111"));
  auto b = delta_nat_binary();
  CHECK(enc(b, {n(5)}) == parse_tape("^101"));
  CHECK(enc(b, {n(0)}) == parse_tape("^0"));

  // Zero in unary is the blank block; the separator keeps pairs apart.
  CHECK(enc(u, {n(0), n(2)}) != enc(u, {n(2), n(0)}));
}

TEST_CASE("encodings are injective and decodable") {
  auto u = delta_nat_unary();
  auto b = delta_nat_binary();
  std::set<std::string> seen_u, seen_b;
  for (std::uint64_t x = 0; x <= 12; ++x)
    for (std::uint64_t y = 0; y <= 12; ++y) {
      Tuple t{n(x), n(y)};
      auto tu = enc(u, t);
      auto tb = enc(b, t);
      CHECK(seen_u.insert(tu.str()).second);
      CHECK(seen_b.insert(tb.str()).second);
      CHECK(decode_nat_unary(tu, 2) == std::vector<std::uint64_t>{x, y});
      CHECK(decode_nat_binary(tb, 2) == std::vector<std::uint64_t>{x, y});
    }
  for (std::uint64_t x = 0; x <= 40; ++x) {
    CHECK(decode_nat_unary(enc(u, {n(x)}), 1) == std::vector<std::uint64_t>{x});
    CHECK(decode_nat_binary(enc(b, {n(x)}), 1) == std::vector<std::uint64_t>{x});
  }
}

TEST_CASE("shipped tape programs") {
  const auto& progs = builtin_tm_programs();
  auto d = delta_bool();
  auto r0 = run(tm_model(), progs.at("tm_read0").program, d(Tuple{n(0)}), 100);
  CHECK(r0.outcome == Outcome::Terminated);
  CHECK(r0.last().configuration == d(Tuple{n(0)}));
  CHECK(run(tm_model(), progs.at("tm_read0").program, d(Tuple{n(1)}), 100).outcome == Outcome::Stuck);
  auto a = run(tm_model(), progs.at("tm_and").program, d(Tuple{n(1), n(1)}), 100);
  CHECK(a.outcome == Outcome::Terminated);
  CHECK(a.last().configuration == d(Tuple{n(1)}));
  for (const auto& [name, p] : progs) CHECK_NOTHROW(p.program.validate(tm_model()));
}

TEST_CASE("verifying boolean implementations") {
  auto b = booleans();
  auto good = verify_implementation(tm_model(), *b,
                                    bool_impl({{"not", "tm_not"}, {"read0", "tm_read0"}, {"read1", "tm_read1"},
                                               {"and", "tm_and"}}),
                                    {"not", "read0", "read1", "and"}, 50, 100000);
  CHECK(good.pass());
  REQUIRE(good.maps.size() == 4);
  for (const auto& m : good.maps) {
    for (const auto& c : m.checks) {
      CHECK(replay(tm_model(), builtin_tm_programs().at("tm_" + m.map).program, c.trace));
      if (c.expected) CHECK(c.trace.last().configuration == delta_bool()(*c.expected));
    }
  }
  const auto& and_checks = good.maps[3].checks;
  CHECK(and_checks.size() == 4);

  auto bad = verify_implementation(tm_model(), *b, bool_impl({{"not", "tm_id"}}), {"not"}, 50, 100000);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.maps[0].witness);
  CHECK(bad.maps[0].witness->input == Tuple{n(0)});

  CHECK_THROWS_AS(verify_implementation(tm_model(), *b, bool_impl({}), {"not"}, 50, 1000), Error);

  // The verdict does not depend on the seed.
  for (std::uint64_t seed : {1, 2, 99})
    CHECK(verify_implementation(tm_model(), *b, bool_impl({{"not", "tm_not"}}), {"not"}, 50, 1000, seed).pass());
}

TEST_CASE("verifying the unary successor") {
  auto nb = naturals_basic();
  ImplementationMap impl{delta_nat_unary(), {{"succ", builtin_tm_programs().at("tm_succ_unary").program}}};
  auto r = verify_implementation(tm_model(), *nb, impl, {"succ"}, 21, 100000);
  CHECK(r.pass());
  REQUIRE(r.maps.size() == 1);
  CHECK(r.maps[0].checks.size() == 21);
  CHECK(r.maps[0].checks.back().input == Tuple{n(20)});
}

TEST_CASE("verify_map reports undefined terminations without failing") {
  auto b = booleans();
  // tm_id terminates everywhere, including where read0 is undefined.
  auto v = verify_map(tm_model(), b->map("read0"), builtin_tm_programs().at("tm_id").program, delta_bool(),
                      {{n(0)}, {n(1)}}, 100);
  CHECK(v.pass);
  CHECK(v.undefined_terminations.size() == 1);
}
