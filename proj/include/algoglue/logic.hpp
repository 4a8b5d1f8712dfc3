#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algoglue/data_structures.hpp"
#include "algoglue/sexpr.hpp"

namespace algoglue {

struct Term {
  std::string name;  // variable or function symbol
  std::vector<Term> args;
  bool variable = false;

  std::string str() const;
};

struct Formula {
  enum class Kind { Eq, Rel, Not, And, Or, Implies };
  Kind kind = Kind::Eq;
  std::string relation;       // Rel
  std::vector<Term> terms;    // Eq (two terms), Rel (arguments)
  std::vector<Formula> parts; // Not (one), And/Or (any), Implies (two)

  std::string str() const;
};

/// A universally closed quantifier-free sentence.
struct Sentence {
  std::vector<std::string> variables;
  Formula body;

  std::string str() const;
};

/// Function and relation symbols with their arities, collected from sentences.
struct Signature {
  std::map<std::string, std::size_t> functions;
  std::map<std::string, std::size_t> relations;
};

struct Theory {
  std::string name;
  std::vector<Sentence> sentences;

  /// Throws ArityMismatch when a symbol is used with two arities or as both
  /// a function and a relation.
  Signature signature() const;
};

/// `(forall (a b) body)`; body forms are `(= t u)`, `(rel r t...)`, `(not f)`,
/// `(and f...)`, `(or f...)`, `(=> f g)`. Bound names are variables, other
/// atoms are constants (nullary function symbols).
Sentence parse_sentence(const SExpr& e);
Theory parse_theory(std::string name, std::string_view text);

/// Symbol -> name of a structural map.
using Binding = std::map<std::string, std::string>;

struct SentenceReport {
  std::size_t index = 0;
  std::string text;
  std::size_t checked = 0;
  std::optional<Environment> counterexample;
};

struct ModelCheckReport {
  std::string theory;
  std::string structure;
  std::vector<SentenceReport> sentences;

  bool ok() const;
  std::string str() const;
};

/// Evaluates every sentence on `sample_size` seeded assignments. Sample i of
/// sentence k depends only on (seed, k, i). An atom containing an undefined
/// subterm is false; a relation atom holds iff its guard is defined.
/// Throws UnboundSymbol and ArityMismatch.
ModelCheckReport check_model(const AbstractDataStructure& structure, const Theory& theory,
                             const Binding& binding, std::size_t sample_size, std::uint64_t seed = 0);

/// Ring-style axioms (commutative semiring, no negation), the division
/// identity, and the zero-test axioms, over symbols zero, one, add, mult,
/// div, mod, id, iszero, nonzero.
const Theory& euclidean_theory();
const char* euclidean_theory_text();
Binding euclidean_binding();

}  // namespace algoglue
