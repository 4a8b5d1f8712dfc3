#include "algoglue/representation.hpp"

#include <set>
#include <sstream>

#include "algoglue/error.hpp"

namespace algoglue {

Config Interpretation::operator()(std::span<const Value> tuple) const {
  if (tuple.size() > arity_bound) {
    throw Error(Errc::ArityMismatch, name + " encodes tuples of length <= " + std::to_string(arity_bound) +
                                         ", got " + std::to_string(tuple.size()));
  }
  return encode(tuple);
}

namespace {

Tape blocks_tape(std::span<const Value> tuple, const std::function<std::string(std::uint64_t)>& block) {
  std::string w;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) w += Tape::kBlank;
    w += block(tuple[i].as_nat());
  }
  return Tape(w, 0);
}

std::string binary(std::uint64_t n) {
  if (n == 0) return "0";
  std::string s;
  for (; n; n >>= 1) s.insert(s.begin(), static_cast<char>('0' + (n & 1)));
  return s;
}

// Splits the tape into `arity` blocks starting at position 0. Every cell
// outside the blocks and separators must be blank.
std::optional<std::vector<std::string>> read_blocks(const Tape& t, std::size_t arity) {
  std::vector<std::string> blocks;
  std::int64_t pos = 0;
  for (std::size_t i = 0; i < arity; ++i) {
    std::string b;
    while (t.at(pos) != Tape::kBlank) b += t.at(pos++);
    blocks.push_back(b);
    ++pos;
  }
  Tape rest = t;
  for (std::int64_t p = 0; p < pos; ++p) rest = rest.with(p, Tape::kBlank);
  if (!rest.blank()) return std::nullopt;
  return blocks;
}

}  // namespace

Interpretation delta_bool() {
  Interpretation d;
  d.name = "delta_bool";
  d.domain = "B";
  d.arity_bound = 2;
  d.target_model = "tm";
  d.encode = [](std::span<const Value> t) -> Config {
    return blocks_tape(t, [](std::uint64_t b) {
      if (b > 1) throw Error(Errc::ArityMismatch, "not a boolean: " + std::to_string(b));
      return std::string(1, static_cast<char>('0' + b));
    });
  };
  return d;
}

Interpretation delta_nat_unary(std::size_t arity_bound) {
  Interpretation d;
  d.name = "delta_nat_unary";
  d.domain = "N";
  d.arity_bound = arity_bound;
  d.target_model = "tm";
  d.encode = [](std::span<const Value> t) -> Config {
    return blocks_tape(t, [](std::uint64_t n) { return std::string(n, '1'); });
  };
  return d;
}

Interpretation delta_nat_binary(std::size_t arity_bound) {
  Interpretation d;
  d.name = "delta_nat_binary";
  d.domain = "N";
  d.arity_bound = arity_bound;
  d.target_model = "tm";
  d.encode = [](std::span<const Value> t) -> Config { return blocks_tape(t, binary); };
  return d;
}

std::optional<std::vector<std::uint64_t>> decode_nat_unary(const Tape& t, std::size_t arity) {
  auto blocks = read_blocks(t, arity);
  if (!blocks) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (const auto& b : *blocks) {
    if (b.find('0') != std::string::npos) return std::nullopt;
    out.push_back(b.size());
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> decode_nat_binary(const Tape& t, std::size_t arity) {
  auto blocks = read_blocks(t, arity);
  if (!blocks) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (const auto& b : *blocks) {
    if (b.empty() || b.size() > 64 || (b.size() > 1 && b[0] == '0')) return std::nullopt;
    std::uint64_t n = 0;
    for (char c : b) n = (n << 1) | static_cast<std::uint64_t>(c - '0');
    out.push_back(n);
  }
  return out;
}

bool VerificationReport::pass() const {
  for (const auto& m : maps)
    if (!m.pass) return false;
  return true;
}

namespace {

std::string tuple_str(const DataDomain& d, const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + d.render(t[i]);
  return s + ")";
}

}  // namespace

std::string VerificationReport::str(const DataDomain& domain) const {
  std::ostringstream os;
  for (const auto& m : maps) {
    os << m.map << ": " << (m.pass ? "PASS" : "FAIL") << " (" << m.checks.size() << " inputs)\n";
    if (m.witness) {
      const auto& w = *m.witness;
      os << "  counterexample " << tuple_str(domain, w.input) << ": run "
         << to_string(w.trace.outcome) << " at " << config_str(w.trace.last().configuration);
      if (w.expected) os << ", expected " << tuple_str(domain, *w.expected);
      os << "\n";
    }
    if (!m.undefined_terminations.empty())
      os << "  note: terminates on " << m.undefined_terminations.size()
         << " input(s) outside the domain of the map\n";
  }
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::vector<Tuple> test_tuples(const DataDomain& d, std::size_t k, std::size_t n, std::uint64_t seed,
                               const std::string& salt) {
  if (auto e = enumerate_tuples(d, k, n)) return std::move(*e);
  Rng rng(seed ^ std::hash<std::string>{}(salt));
  std::vector<Tuple> tuples;
  for (std::size_t i = 0; i < n; ++i) {
    Tuple t;
    for (std::size_t j = 0; j < k; ++j) t.push_back(d.sample(rng, d.default_size));
    tuples.push_back(std::move(t));
  }
  return tuples;
}

MapVerdict verify_map(const ModelOfComputation& model, const StructuralMap& f, const Program& program,
                      const Interpretation& delta, const std::vector<Tuple>& tuples, std::size_t budget) {
  if (f.dom > delta.arity_bound || f.im > delta.arity_bound) {
    throw Error(Errc::ArityMismatch, "map " + f.name + " exceeds the arity bound of " + delta.name);
  }
  MapVerdict v;
  v.map = f.name;
  for (const auto& d : tuples) {
    CheckRecord rec;
    rec.input = d;
    rec.expected = f.apply(d);
    rec.trace = run(model, program, delta(d), budget);
    if (rec.expected) {
      rec.passed = rec.trace.outcome == Outcome::Terminated &&
                   rec.trace.last().configuration == delta(*rec.expected);
      if (!rec.passed && v.pass) {
        v.pass = false;
        v.witness = rec;
      }
    } else if (rec.trace.outcome == Outcome::Terminated) {
      v.undefined_terminations.push_back(d);
    }
    v.checks.push_back(std::move(rec));
  }
  return v;
}

VerificationReport verify_implementation(const ModelOfComputation& model,
                                         const AbstractDataStructure& structure,
                                         const ImplementationMap& impl,
                                         const std::vector<std::string>& covered, std::size_t sample_size,
                                         std::size_t budget, std::uint64_t seed) {
  VerificationReport report;
  const auto& dom = structure.domain();
  std::map<std::size_t, std::set<std::string>> seen_codes;
  std::set<std::size_t> warned;
  for (const auto& name : covered) {
    const auto& f = structure.map(name);
    auto it = impl.programs.find(name);
    if (it == impl.programs.end()) throw Error(Errc::MissingProgram, "no program for map " + name);
    it->second.validate(model);

    auto tuples = test_tuples(dom, f.dom, sample_size, seed, name);

    std::map<std::string, Tuple> codes;
    for (const auto& t : tuples) {
      auto code = config_str(impl.interpretation(t));
      auto [pos, fresh] = codes.emplace(code, t);
      if (!fresh && pos->second != t && !warned.count(f.dom)) {
        warned.insert(f.dom);
        report.warnings.push_back(impl.interpretation.name + " is not injective on " +
                                  std::to_string(f.dom) + "-tuples: " + tuple_str(dom, pos->second) +
                                  " and " + tuple_str(dom, t) + " share the code " + code);
      }
    }
    report.maps.push_back(verify_map(model, f, it->second, impl.interpretation, tuples, budget));
  }
  return report;
}

namespace {

using EdgeSpec = std::tuple<const char*, const char*, std::string>;

Program tm_program(std::initializer_list<const char*> states, std::initializer_list<EdgeSpec> edges) {
  Program p;
  p.model = "tm";
  for (const char* s : states) p.graph.add_state(s);
  p.graph.initial = p.graph.state("i");
  p.graph.terminal = p.graph.state("t");
  for (const auto& [a, b, l] : edges) p.graph.add_edge(a, b, l);
  p.validate(tm_model());
  return p;
}

std::map<std::string, BuiltinProgram> make_builtins() {
  const std::string R(tm::kRight), L(tm::kLeft);
  const auto r0 = tm::read('0'), r1 = tm::read('1'), rb = tm::read('*');
  const auto w0 = tm::write('0'), w1 = tm::write('1'), wb = tm::write('*');
  std::map<std::string, BuiltinProgram> m;

  m["tm_read0"] = {tm_program({"i", "t"}, {{"i", "t", r0}}), "booleans", "read0", "delta_bool",
                   "halts iff the scanned cell is 0"};
  m["tm_read1"] = {tm_program({"i", "t"}, {{"i", "t", r1}}), "booleans", "read1", "delta_bool",
                   "halts iff the scanned cell is 1"};
  m["tm_not"] = {tm_program({"i", "a0", "a1", "t"},
                            {{"i", "a0", r0}, {"a0", "t", w1}, {"i", "a1", r1}, {"a1", "t", w0}}),
                 "booleans", "not", "delta_bool", "flips the scanned bit"};
  // `left` brings the cell at position +1 under the head.
  m["tm_and"] = {tm_program({"i", "z0", "z1", "z2", "z3", "z4", "o0", "o1", "o2", "p0", "p1", "p2", "p3",
                             "q0", "q1", "q2", "t"},
                            {{"i", "z0", r0},
                             {"z0", "z1", L},
                             {"z1", "z2", L},
                             {"z2", "z3", wb},
                             {"z3", "z4", R},
                             {"z4", "t", R},
                             {"i", "o0", r1},
                             {"o0", "o1", L},
                             {"o1", "o2", L},
                             {"o2", "p0", r0},
                             {"p0", "p1", wb},
                             {"p1", "p2", R},
                             {"p2", "p3", R},
                             {"p3", "t", w0},
                             {"o2", "q0", r1},
                             {"q0", "q1", wb},
                             {"q1", "q2", R},
                             {"q2", "t", R}}),
                 "booleans", "and", "delta_bool", "erases the second operand and writes the conjunction"};
  m["tm_succ_unary"] = {tm_program({"i", "q1", "q2", "q3", "q4", "q5", "t"},
                                   {{"i", "q1", r1},
                                    {"q1", "i", L},
                                    {"i", "q2", rb},
                                    {"q2", "q3", w1},
                                    {"q3", "q4", r1},
                                    {"q4", "q3", R},
                                    {"q3", "q5", rb},
                                    {"q5", "t", L}}),
                        "naturals_basic", "succ", "delta_nat_unary",
                        "appends a 1 to the block and returns to its first cell"};
  m["tm_id"] = {tm_program({"i", "m", "t"}, {{"i", "m", R}, {"m", "t", L}}), "", "", "",
                "moves one cell and back; the identity on every tape"};
  return m;
}

}  // namespace

const std::map<std::string, BuiltinProgram>& builtin_tm_programs() {
  static const auto programs = make_builtins();
  return programs;
}

}  // namespace algoglue
