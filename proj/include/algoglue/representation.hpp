#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algoglue/data_structures.hpp"
#include "algoglue/program.hpp"

namespace algoglue {

/// Encoding of data tuples of length <= arity_bound into configurations of
/// the model named `target_model`.
struct Interpretation {
  std::string name;
  std::string domain;
  std::size_t arity_bound = 0;
  std::string target_model;
  std::function<Config(std::span<const Value>)> encode;

  /// Throws ArityMismatch above the bound.
  Config operator()(std::span<const Value> tuple) const;
};

/// Booleans on tapes: a -> *a*, (a, b) -> *a*b*, origin on the first symbol.
Interpretation delta_bool();
/// Naturals in unary: (a0, a1, ...) -> *1^a0*1^a1*...*, origin on the first cell
/// of the first block.
Interpretation delta_nat_unary(std::size_t arity_bound = 2);
/// Naturals in binary, most significant bit first, 0 written as `0`.
Interpretation delta_nat_binary(std::size_t arity_bound = 2);

std::optional<std::vector<std::uint64_t>> decode_nat_unary(const Tape& t, std::size_t arity);
std::optional<std::vector<std::uint64_t>> decode_nat_binary(const Tape& t, std::size_t arity);

/// Test inputs for a map of arity k: the first n tuples of the domain
/// enumeration, or n seeded samples when the domain is not enumerable.
std::vector<Tuple> test_tuples(const DataDomain& d, std::size_t k, std::size_t n, std::uint64_t seed,
                               const std::string& salt);

/// An interpretation plus one program per structural map.
struct ImplementationMap {
  Interpretation interpretation;
  std::map<std::string, Program> programs;
};

struct CheckRecord {
  Tuple input;
  std::optional<Tuple> expected;  // unset where the map is undefined
  Trace trace;
  bool passed = true;
};

struct MapVerdict {
  std::string map;
  bool pass = true;
  std::vector<CheckRecord> checks;
  std::optional<CheckRecord> witness;         // first failing check
  std::vector<Tuple> undefined_terminations;  // informational only
};

struct VerificationReport {
  std::vector<MapVerdict> maps;
  std::vector<std::string> warnings;

  bool pass() const;
  std::string str(const DataDomain& domain) const;
};

/// Checks run(delta(f), Delta(d)) terminates at Delta(f(d)) for every covered
/// map f and every tested tuple d in the domain of f. Tuples are the first
/// `sample_size` of the domain enumeration, or seeded samples when the domain
/// is not enumerable. Throws MissingProgram.
VerificationReport verify_implementation(const ModelOfComputation& model,
                                         const AbstractDataStructure& structure,
                                         const ImplementationMap& impl,
                                         const std::vector<std::string>& covered, std::size_t sample_size,
                                         std::size_t budget, std::uint64_t seed = 0);

/// Same check for one map on explicitly given tuples.
MapVerdict verify_map(const ModelOfComputation& model, const StructuralMap& f, const Program& program,
                      const Interpretation& delta, const std::vector<Tuple>& tuples, std::size_t budget);

struct BuiltinProgram {
  Program program;
  std::string structure;       // structure whose map it implements ("" if none)
  std::string map;             // implemented structural map
  std::string interpretation;  // with respect to this interpretation
  std::string summary;
};

/// tm_read0, tm_read1, tm_not, tm_and (booleans / delta_bool), tm_succ_unary
/// (naturals / delta_nat_unary), tm_id (identity, used as a wrong witness).
const std::map<std::string, BuiltinProgram>& builtin_tm_programs();

}  // namespace algoglue
