#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algoglue/algorithms.hpp"
#include "algoglue/glueing.hpp"
#include "algoglue/representation.hpp"

namespace algoglue {

/// Program file: {"model", "states", "initial", "terminal", "edges": [{"from","to","label"}]}.
std::string write_program(const Program& p);
Program read_program(std::string_view json);

/// A label meaning as written in an algorithm file. Composite maps carry
/// their own frame and pipeline so that files are self-contained.
struct OperationSpec {
  std::string map;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  struct Composite {
    std::vector<std::string> frame;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<OperationSpec> pipeline;
  };
  std::shared_ptr<Composite> composite;

  friend bool operator==(const OperationSpec& a, const OperationSpec& b);
};

OperationSpec describe(const AnchoredOperation& op);

/// Algorithm file: program layout without "model", plus "labels", "frame",
/// and optionally "structure" + "semantics" or "theory" + "symbols".
struct AlgorithmDocument {
  SyntacticAlgorithm syntax;
  std::vector<std::string> frame;
  std::string structure;
  std::map<std::string, OperationSpec> semantics;
  std::string theory;  // file reference
  std::map<std::string, std::vector<SymbolAnchor>> symbols;

  bool semantic() const { return !structure.empty(); }
  bool logical() const { return !theory.empty(); }

  friend bool operator==(const AlgorithmDocument& a, const AlgorithmDocument& b);
};

std::string write_algorithm(const AlgorithmDocument& doc);
AlgorithmDocument read_algorithm(std::string_view json);
AlgorithmDocument document(const SyntacticAlgorithm& a);
AlgorithmDocument document(const SemanticAlgorithm& a);
AlgorithmDocument document(const LogicalAlgorithm& a, const std::string& theory_ref);

/// Labelling file: {"targets": "programs" | "algorithms", "model"?, "map": {label: file}}.
struct LabellingDocument {
  std::string targets = "programs";
  std::string model;
  std::map<std::string, std::string> map;

  friend bool operator==(const LabellingDocument&, const LabellingDocument&) = default;
};
std::string write_labelling(const LabellingDocument& doc);
LabellingDocument read_labelling(std::string_view json);

/// Implementation manifest: {"interpretation", "structure", "programs": {map: file}}.
struct ManifestDocument {
  std::string interpretation;
  std::string structure;
  std::map<std::string, std::string> programs;

  friend bool operator==(const ManifestDocument&, const ManifestDocument&) = default;
};
std::string write_manifest(const ManifestDocument& doc);
ManifestDocument read_manifest(std::string_view json);

/// Binding file: {symbol: map}.
Binding read_binding(std::string_view json);
std::string write_binding(const Binding& b);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view text);

/// Registry of built-in and loaded objects. References are either
/// "builtin:<name>", a bare built-in name, or a file path resolved against
/// `base`.
class Workspace {
 public:
  Workspace();

  StructurePtr structure(const std::string& name) const;
  Interpretation interpretation(const std::string& name) const;
  /// "tm" or an induced model "structure[v1,...]" whose instructions are the
  /// program's labels.
  ModelOfComputation model_for(const Program& p) const;

  Program program(const std::string& ref, const std::filesystem::path& base = {}) const;
  AlgorithmDocument algorithm(const std::string& ref, const std::filesystem::path& base = {}) const;
  SemanticAlgorithm semantic(const AlgorithmDocument& doc);
  LogicalAlgorithm logical(const AlgorithmDocument& doc, const std::filesystem::path& base = {}) const;
  std::shared_ptr<const Theory> theory(const std::string& ref, const std::filesystem::path& base = {}) const;
  Binding binding(const std::string& ref, const std::filesystem::path& base = {}) const;

  ProgramLabelling program_labelling(const std::string& ref) const;
  AlgorithmLabelling algorithm_labelling(const std::string& ref) const;
  ImplementationMap manifest(const std::string& ref, std::string* structure_name) const;

  AnchoredOperation operation(const OperationSpec& spec, const AbstractDataStructure& s) const;
  /// Registers a map that files may reference by name besides the
  /// structure's own maps (composites, algorithm-defined maps).
  void register_map(const StructuralMap& m);

  std::vector<std::string> builtin_programs() const;
  std::vector<std::string> builtin_algorithms() const;
  std::vector<std::string> builtin_structures() const;

 private:
  const StructuralMap* find_map(const AbstractDataStructure& s, const std::string& name) const;

  std::map<std::string, StructurePtr> structures_;
  std::map<std::string, Program> programs_;
  std::map<std::string, AlgorithmDocument> algorithms_;
  std::map<std::string, LabellingDocument> labellings_;
  std::map<std::string, Binding> bindings_;
  std::map<std::string, StructuralMap> maps_;
};

}  // namespace algoglue
