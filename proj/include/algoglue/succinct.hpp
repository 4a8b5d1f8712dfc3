#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algoglue/glueing.hpp"

namespace algoglue {

std::size_t size(const ControlGraph& g);
std::size_t size(const Program& p);
std::size_t size(const SyntacticAlgorithm& a);

/// A unary function on naturals given as an expression over `n` with
/// + - * / ( ) sqrt() log2(); division and roots are floored, negative
/// results clamp to 0. The o(n) contract is declared, not proved.
class SizeFunction {
 public:
  SizeFunction(std::string name, std::function<std::uint64_t(std::uint64_t)> fn);
  static SizeFunction parse(std::string_view expression);

  std::uint64_t operator()(std::uint64_t n) const { return fn_(n); }
  const std::string& name() const { return name_; }

  /// First n in [1, hi] breaking monotonicity, or n >= threshold with f(n) >= n.
  std::optional<std::uint64_t> contract_violation(std::uint64_t threshold, std::uint64_t hi) const;

 private:
  std::string name_;
  std::function<std::uint64_t(std::uint64_t)> fn_;
};

struct SuccinctVerdict {
  bool implements = false;
  std::size_t size_program = 0;
  std::size_t size_algorithm = 0;
  std::uint64_t bound = 0;  // f(size_program)
  bool succinct() const { return implements && size_algorithm <= bound; }
};

SuccinctVerdict is_f_succinct(const Program& p, const SyntacticAlgorithm& a, const ProgramLabelling& phi,
                              const SizeFunction& f);

using Library = std::vector<std::pair<std::string, Program>>;

struct SuccinctWitness {
  SyntacticAlgorithm algorithm;
  ProgramLabelling labelling;
  SuccinctVerdict verdict;
};

struct FindResult {
  std::optional<SuccinctWitness> witness;
  std::size_t nodes = 0;
  bool budget_exhausted = false;
};

/// Partitions the edges of P into segments, each an embedded copy of a
/// library program whose internal states touch only that segment. The
/// boundary states form the skeleton algorithm, one label per library
/// program used. Segments are chosen for the lowest-index uncovered edge,
/// trying larger library programs first. Every returned witness has been
/// re-checked with check_implements and the size bound. `budget` caps the
/// number of search nodes. Library programs whose initial or terminal state
/// has no edges, or with isolated internal states, are skipped.
FindResult find_succinct(const Program& p, const Library& library, const SizeFunction& f, std::size_t budget);

struct CensusRow {
  std::size_t n = 0;
  std::size_t programs = 0;
  std::size_t succinct = 0;
  double fraction() const { return programs ? static_cast<double>(succinct) / programs : 0.0; }
};

struct CensusResult {
  std::vector<CensusRow> rows;
  bool truncated = false;
  /// Columns n,programs_enumerated,succinct_count,fraction; fraction with six decimals.
  std::string csv() const;
};

/// Programs of size exactly n (n = 2..n_max) over the instruction subset, one
/// per isomorphism class, with initial != terminal. `budget` bounds the
/// search nodes of each find_succinct call; exhausting it sets `truncated`.
CensusResult census(std::size_t n_max, const SizeFunction& f, const std::string& model,
                    const std::vector<std::string>& instructions, std::size_t budget, const Library& library);

/// All two-edge chains i -a-> m -b-> t over the instructions, named "a;b".
Library chain_library(const std::string& model, const std::vector<std::string>& instructions);

}  // namespace algoglue
