#include "algoglue/logic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "algoglue/error.hpp"

namespace algoglue {

std::string Term::str() const {
  if (variable || args.empty()) return name;
  std::string s = "(" + name;
  for (const auto& a : args) s += " " + a.str();
  return s + ")";
}

std::string Formula::str() const {
  auto join_terms = [&] {
    std::string s;
    for (const auto& t : terms) s += " " + t.str();
    return s;
  };
  auto join_parts = [&] {
    std::string s;
    for (const auto& p : parts) s += " " + p.str();
    return s;
  };
  switch (kind) {
    case Kind::Eq: return "(=" + join_terms() + ")";
    case Kind::Rel: return "(rel " + relation + join_terms() + ")";
    case Kind::Not: return "(not" + join_parts() + ")";
    case Kind::And: return "(and" + join_parts() + ")";
    case Kind::Or: return "(or" + join_parts() + ")";
    case Kind::Implies: return "(=>" + join_parts() + ")";
  }
  return "";
}

std::string Sentence::str() const {
  std::string s = "(forall (";
  for (std::size_t i = 0; i < variables.size(); ++i) s += (i ? " " : "") + variables[i];
  return s + ") " + body.str() + ")";
}

namespace {

void note(std::map<std::string, std::size_t>& table, const std::string& name, std::size_t arity) {
  auto [it, fresh] = table.emplace(name, arity);
  if (!fresh && it->second != arity)
    throw Error(Errc::ArityMismatch, "symbol " + name + " used with arities " + std::to_string(it->second) +
                                         " and " + std::to_string(arity));
}

void collect(const Term& t, Signature& sig) {
  if (t.variable) return;
  note(sig.functions, t.name, t.args.size());
  for (const auto& a : t.args) collect(a, sig);
}

void collect(const Formula& f, Signature& sig) {
  if (f.kind == Formula::Kind::Rel) note(sig.relations, f.relation, f.terms.size());
  for (const auto& t : f.terms) collect(t, sig);
  for (const auto& p : f.parts) collect(p, sig);
}

Term parse_term(const SExpr& e, const std::set<std::string>& vars) {
  if (e.is_atom) {
    Term t;
    t.name = e.atom;
    t.variable = vars.count(e.atom) > 0;
    return t;
  }
  if (e.items.empty() || !e.items[0].is_atom) throw Error(Errc::Parse, "malformed term: " + e.str());
  Term t;
  t.name = e.items[0].atom;
  if (vars.count(t.name)) throw Error(Errc::Parse, "variable applied as a function: " + e.str());
  for (std::size_t i = 1; i < e.items.size(); ++i) t.args.push_back(parse_term(e.items[i], vars));
  return t;
}

Formula parse_formula(const SExpr& e, const std::set<std::string>& vars) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom)
    throw Error(Errc::Parse, "malformed formula: " + e.str());
  const auto& head = e.items[0].atom;
  auto rest = std::span(e.items).subspan(1);
  Formula f;
  auto parts = [&](std::size_t lo, std::size_t hi) {
    if (rest.size() < lo || rest.size() > hi) throw Error(Errc::Parse, "wrong operand count: " + e.str());
    for (const auto& r : rest) f.parts.push_back(parse_formula(r, vars));
  };
  if (head == "=") {
    f.kind = Formula::Kind::Eq;
    if (rest.size() != 2) throw Error(Errc::Parse, "equality takes two terms: " + e.str());
    for (const auto& r : rest) f.terms.push_back(parse_term(r, vars));
  } else if (head == "rel") {
    f.kind = Formula::Kind::Rel;
    if (rest.empty() || !rest[0].is_atom) throw Error(Errc::Parse, "relation name expected: " + e.str());
    f.relation = rest[0].atom;
    for (const auto& r : rest.subspan(1)) f.terms.push_back(parse_term(r, vars));
  } else if (head == "not") {
    f.kind = Formula::Kind::Not;
    parts(1, 1);
  } else if (head == "and") {
    f.kind = Formula::Kind::And;
    parts(0, SIZE_MAX);
  } else if (head == "or") {
    f.kind = Formula::Kind::Or;
    parts(0, SIZE_MAX);
  } else if (head == "=>") {
    f.kind = Formula::Kind::Implies;
    parts(2, 2);
  } else {
    throw Error(Errc::Parse, "unknown connective '" + head + "'");
  }
  return f;
}

}  // namespace

Signature Theory::signature() const {
  Signature sig;
  for (const auto& s : sentences) collect(s.body, sig);
  for (const auto& [name, _] : sig.functions)
    if (sig.relations.count(name))
      throw Error(Errc::ArityMismatch, "symbol " + name + " is both a function and a relation");
  return sig;
}

Sentence parse_sentence(const SExpr& e) {
  if (e.is_atom || e.items.size() != 3 || !e.items[0].is("forall") || e.items[1].is_atom)
    throw Error(Errc::Parse, "expected (forall (vars) body): " + e.str());
  Sentence s;
  std::set<std::string> vars;
  for (const auto& v : e.items[1].items) {
    if (!v.is_atom) throw Error(Errc::Parse, "bad variable list: " + e.str());
    if (!vars.insert(v.atom).second) throw Error(Errc::Parse, "variable bound twice: " + v.atom);
    s.variables.push_back(v.atom);
  }
  s.body = parse_formula(e.items[2], vars);
  return s;
}

Theory parse_theory(std::string name, std::string_view text) {
  Theory t;
  t.name = std::move(name);
  for (const auto& e : parse_sexprs(text)) t.sentences.push_back(parse_sentence(e));
  t.signature();
  return t;
}

bool ModelCheckReport::ok() const {
  return std::all_of(sentences.begin(), sentences.end(),
                     [](const SentenceReport& s) { return !s.counterexample; });
}

std::string ModelCheckReport::str() const {
  std::ostringstream os;
  os << "theory " << theory << " over " << structure << ": " << (ok() ? "no counterexample" : "FAILED")
     << "\n";
  for (const auto& s : sentences) {
    os << "  [" << s.index << "] " << (s.counterexample ? "FAIL" : "ok  ") << " " << s.text << "\n";
    if (s.counterexample) os << "      counterexample " << s.counterexample->str() << "\n";
  }
  return os.str();
}

namespace {

struct Evaluator {
  const std::map<std::string, const StructuralMap*>& maps;
  const Environment& env;

  std::optional<Value> term(const Term& t) const {
    if (t.variable) return env.get(t.name);
    Tuple args;
    for (const auto& a : t.args) {
      auto v = term(a);
      if (!v) return std::nullopt;
      args.push_back(*v);
    }
    auto r = maps.at(t.name)->apply(args);
    if (!r) return std::nullopt;
    return (*r)[0];
  }

  bool holds(const Formula& f) const {
    switch (f.kind) {
      case Formula::Kind::Eq: {
        auto a = term(f.terms[0]);
        auto b = term(f.terms[1]);
        return a && b && *a == *b;
      }
      case Formula::Kind::Rel: {
        Tuple args;
        for (const auto& t : f.terms) {
          auto v = term(t);
          if (!v) return false;
          args.push_back(*v);
        }
        return maps.at(f.relation)->apply(args).has_value();
      }
      case Formula::Kind::Not: return !holds(f.parts[0]);
      case Formula::Kind::And:
        return std::all_of(f.parts.begin(), f.parts.end(), [&](const Formula& p) { return holds(p); });
      case Formula::Kind::Or:
        return std::any_of(f.parts.begin(), f.parts.end(), [&](const Formula& p) { return holds(p); });
      case Formula::Kind::Implies: return !holds(f.parts[0]) || holds(f.parts[1]);
    }
    return false;
  }
};

}  // namespace

ModelCheckReport check_model(const AbstractDataStructure& structure, const Theory& theory,
                             const Binding& binding, std::size_t sample_size, std::uint64_t seed) {
  auto sig = theory.signature();
  std::map<std::string, const StructuralMap*> maps;
  auto resolve = [&](const std::string& symbol) -> const StructuralMap& {
    auto it = binding.find(symbol);
    if (it == binding.end()) throw Error(Errc::UnboundSymbol, "symbol " + symbol + " is not bound");
    const auto* m = structure.find(it->second);
    if (!m)
      throw Error(Errc::UnboundSymbol, "symbol " + symbol + " is bound to " + it->second +
                                           ", which " + structure.name() + " lacks");
    maps[symbol] = m;
    return *m;
  };
  for (const auto& [f, arity] : sig.functions) {
    const auto& m = resolve(f);
    if (m.dom != arity || m.im != 1)
      throw Error(Errc::ArityMismatch, "function symbol " + f + "/" + std::to_string(arity) + " bound to " +
                                           m.name + " : " + std::to_string(m.dom) + " -> " +
                                           std::to_string(m.im));
  }
  for (const auto& [r, arity] : sig.relations) {
    const auto& m = resolve(r);
    if (m.dom != arity || !m.guard)
      throw Error(Errc::ArityMismatch, "relation symbol " + r + "/" + std::to_string(arity) +
                                           " must be bound to a guard of that arity, got " + m.name);
  }

  ModelCheckReport report;
  report.theory = theory.name;
  report.structure = structure.name();
  const auto& dom = structure.domain();
  for (std::size_t k = 0; k < theory.sentences.size(); ++k) {
    const auto& s = theory.sentences[k];
    SentenceReport sr;
    sr.index = k;
    sr.text = s.str();
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + k + 1);
    for (std::size_t i = 0; i < sample_size; ++i) {
      Environment env;
      for (const auto& v : s.variables) env.set(v, dom.sample(rng, dom.default_size));
      ++sr.checked;
      if (!Evaluator{maps, env}.holds(s.body)) {
        sr.counterexample = env;
        break;
      }
    }
    report.sentences.push_back(std::move(sr));
  }
  return report;
}

const char* euclidean_theory_text() {
  return R"(; commutative semiring
(forall (a b) (= (add a b) (add b a)))
(forall (a b c) (= (add (add a b) c) (add a (add b c))))
(forall (a) (= (add a zero) a))
(forall (a b) (= (mult a b) (mult b a)))
(forall (a b c) (= (mult (mult a b) c) (mult a (mult b c))))
(forall (a) (= (mult a one) a))
(forall (a) (= (mult a zero) zero))
(forall (a b c) (= (mult a (add b c)) (add (mult a b) (mult a c))))
; zero tests
(forall (a) (or (rel iszero a) (rel nonzero a)))
(forall (a) (not (and (rel iszero a) (rel nonzero a))))
(forall (a) (=> (rel iszero a) (= a zero)))
(forall (a) (=> (rel nonzero a) (not (= a zero))))
; Euclidean division
(forall (a b) (=> (rel nonzero b) (= a (add (mult (div a b) b) (mod a b)))))
(forall (a) (= (id a) a))
)";
}

const Theory& euclidean_theory() {
  static const Theory t = parse_theory("euclidean", euclidean_theory_text());
  return t;
}

Binding euclidean_binding() {
  return {{"zero", "const_0"}, {"one", "const_1"}, {"add", "add"},       {"mult", "mult"},
          {"div", "div"},      {"mod", "mod"},     {"id", "id"},         {"iszero", "read0"},
          {"nonzero", "readS"}};
}

}  // namespace algoglue
