#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "algoglue/data_structures.hpp"
#include "algoglue/error.hpp"
#include "algoglue/logic.hpp"
#include "algoglue/program.hpp"

namespace algoglue {

/// A finite labelled control graph. `labels` is the declared label set L;
/// every edge label must belong to it.
struct SyntacticAlgorithm {
  ControlGraph graph;
  std::vector<std::string> labels;

  /// Graph conventions, unique labels, every edge label declared.
  void validate() const;

  friend bool operator==(const SyntacticAlgorithm&, const SyntacticAlgorithm&) = default;
};

/// Declares the edge labels of `g` in order of first use.
SyntacticAlgorithm make_syntactic(ControlGraph g);

/// The algorithm with one edge i -label-> t.
SyntacticAlgorithm single_edge(const std::string& label);

/// Labels interpreted as anchored operations of one structure over the
/// variable frame.
struct SemanticAlgorithm {
  SyntacticAlgorithm syntax;
  StructurePtr structure;
  std::vector<std::string> frame;
  std::map<std::string, AnchoredOperation> meaning;

  /// Meaning total on the labels; anchors stay within the frame.
  void validate() const;
};

/// Anchors `pipeline` as one composite operation named `name` over the
/// variables it touches, in order of first use.
AnchoredOperation pipeline_anchor(std::string name, std::vector<AnchoredOperation> pipeline);

struct SymbolAnchor {
  std::string symbol;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  friend bool operator==(const SymbolAnchor&, const SymbolAnchor&) = default;
};

/// Labels interpreted as symbols of a first-order theory. A label may denote
/// a pipeline of several anchored symbols.
struct LogicalAlgorithm {
  SyntacticAlgorithm syntax;
  std::shared_ptr<const Theory> theory;
  std::vector<std::string> frame;
  std::map<std::string, std::vector<SymbolAnchor>> meaning;

  /// Function symbols read `arity` variables and write one; relation
  /// symbols read and write the same `arity` variables. Symbols other than
  /// the theory's are rejected with UnboundSymbol.
  void validate() const;
};

class ModelCheckFailure : public Error {
 public:
  explicit ModelCheckFailure(ModelCheckReport report);
  const ModelCheckReport& report() const { return report_; }

 private:
  ModelCheckReport report_;
};

/// Replaces each symbol by its bound structural map. Throws
/// ModelCheckFailure when check_model finds a counterexample.
SemanticAlgorithm instantiate(const LogicalAlgorithm& logical, StructurePtr structure, const Binding& binding,
                              std::size_t sample_size = 200, std::uint64_t seed = 0);

/// Every label replaced by the name of its anchored operation, over the model
/// induced_model_name(structure, frame).
Program program_view(const SemanticAlgorithm& alg);
ModelOfComputation algorithm_model(const SemanticAlgorithm& alg);

/// run() of the program view in the induced model. Frame variables missing
/// from `env` start at the domain's default value.
Trace abstract_run(const SemanticAlgorithm& alg, const Environment& env, std::size_t budget);

/// The partial map computed by `alg` from `inputs` to `outputs`, undefined
/// unless the abstract run terminates within `budget`.
StructuralMap algorithm_map(std::string name, const SemanticAlgorithm& alg, std::vector<std::string> inputs,
                            std::vector<std::string> outputs, std::size_t budget);

/// A copy of `structure` with the map of the same name replaced by `m`.
StructurePtr replace_map(const AbstractDataStructure& structure, StructuralMap m);

}  // namespace algoglue
