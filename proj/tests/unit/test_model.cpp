#include <doctest.h>

#include "algoglue/error.hpp"
#include "algoglue/model.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace algoglue;

namespace {

Tape tape(const Config& c) { return std::get<Tape>(c); }

oracle::SparseTape sparse(const Tape& t) {
  oracle::SparseTape s;
  for (std::size_t i = 0; i < t.window().size(); ++i)
    s.set(static_cast<std::int64_t>(i) - t.origin(), t.window()[i]);
  return s;
}

}  // namespace

TEST_CASE("tape literals") {
  auto t = parse_tape("1^01");
  CHECK(t.window() == "101");
  CHECK(t.origin() == 1);
  CHECK(t.at(0) == '0');
  CHECK(t.at(-1) == '1');
  CHECK(t.at(5) == '*');
  CHECK(t.str() == "1^01");
  CHECK(parse_tape("101") == Tape("101", 0));
  CHECK(parse_tape("*").blank());
  CHECK(parse_tape("**^*1**") == Tape("1", -1));
  CHECK_THROWS_AS(parse_tape("12"), Error);
  CHECK_THROWS_AS(parse_tape("1^^0"), Error);
}

TEST_CASE("normalization does not depend on construction order") {
  std::vector<std::pair<std::int64_t, char>> a = {{-2, '1'}, {3, '0'}, {0, '1'}, {5, '*'}};
  std::vector<std::pair<std::int64_t, char>> b = {{5, '*'}, {0, '1'}, {3, '0'}, {-2, '1'}};
  CHECK(Tape::from_cells(a) == Tape::from_cells(b));
  CHECK(Tape::from_cells(a) == parse_tape("1*^1**0"));
}

TEST_CASE("tm instructions") {
  const auto& m = tm_model();
  CHECK(m.instructions().size() == 8);
  Tape blank;

  CHECK(tape(*m.apply("write_1", blank)) == parse_tape("^1"));
  CHECK_FALSE(m.apply("read_*", parse_tape("^1")).has_value());
  CHECK(tape(*m.apply("read_0", parse_tape("1^0"))) == parse_tape("1^0"));
  CHECK(tape(*m.apply("write_*", blank)) == blank);

  // right: t_i = s_{i-1}, so the cell at -1 becomes the cell under the head.
  auto r = tape(*m.apply("right", parse_tape("^101")));
  CHECK(r.window() == "101");
  CHECK(r.origin() == -1);
  CHECK(r.at(1) == '1');
  CHECK(r.at(0) == '*');
  CHECK(tape(*m.apply("left", parse_tape("^101"))) == parse_tape("1^01"));

  CHECK_THROWS_AS(m.apply("jump", blank), Error);
}

TEST_CASE("instruction words") {
  const auto& m = tm_model();
  Tape blank;
  std::vector<std::string> empty;
  CHECK(tape(*m.apply_word(empty, parse_tape("1^0"))) == parse_tape("1^0"));
  std::vector<std::string> w1 = {"write_1", "read_1"};
  CHECK(tape(*m.apply_word(w1, blank)) == parse_tape("^1"));
  std::vector<std::string> w2 = {"read_1"};
  CHECK_FALSE(m.apply_word(w2, blank).has_value());
}

TEST_CASE("tm kernel properties on random tapes") {
  const auto& m = tm_model();
  testgen::Rng rng(7);
  const auto& ins = m.instructions();
  for (int k = 0; k < 500; ++k) {
    auto t = parse_tape(testgen::random_tape_literal(rng, 20));
    auto ref = sparse(t);

    CHECK(tape(*m.apply("left", *m.apply("right", t))) == t);
    CHECK(tape(*m.apply("right", *m.apply("left", t))) == t);
    CHECK(sparse(tape(*m.apply("right", t))).cells == ref.moved(1).cells);
    CHECK(sparse(tape(*m.apply("left", t))).cells == ref.moved(-1).cells);

    for (char c : {'0', '1', '*'}) {
      auto g = m.apply(tm::read(c), t);
      CHECK(g.has_value() == (t.at(0) == c));
      if (g) CHECK(tape(*g) == t);
      for (char d : {'0', '1', '*'})
        CHECK(tape(*m.apply(tm::write(c), *m.apply(tm::write(d), t))) == tape(*m.apply(tm::write(c), t)));
      auto expected = ref;
      expected.set(0, c);
      CHECK(sparse(tape(*m.apply(tm::write(c), t))).cells == expected.cells);
    }

    std::vector<std::string> w1, w2;
    for (int i = testgen::uniform(rng, 0, 4); i > 0; --i) w1.push_back(ins[testgen::uniform(rng, 0, 7)]);
    for (int i = testgen::uniform(rng, 0, 4); i > 0; --i) w2.push_back(ins[testgen::uniform(rng, 0, 7)]);
    auto joined = w1;
    joined.insert(joined.end(), w2.begin(), w2.end());
    auto lhs = m.apply_word(joined, t);
    auto mid = m.apply_word(w1, t);
    auto rhs = mid ? m.apply_word(w2, *mid) : std::nullopt;
    REQUIRE(lhs.has_value() == rhs.has_value());
    if (lhs) CHECK(tape(*lhs) == tape(*rhs));
  }
}

TEST_CASE("declared disjointness") {
  const auto& m = tm_model();
  CHECK(m.disjoint("read_0", "read_1"));
  CHECK(m.disjoint("read_1", "read_*"));
  CHECK_FALSE(m.disjoint("write_0", "write_1"));
  CHECK_FALSE(m.disjoint("read_0", "right"));
}
