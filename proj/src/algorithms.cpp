#include "algoglue/algorithms.hpp"

#include <set>

namespace algoglue {

void SyntacticAlgorithm::validate() const {
  graph.validate();
  std::set<std::string> declared;
  for (const auto& l : labels)
    if (!declared.insert(l).second) throw Error(Errc::ConventionViolation, "label declared twice: " + l);
  for (const auto& e : graph.edges)
    if (!declared.count(e.label)) throw Error(Errc::MissingLabel, "edge label not declared: " + e.label);
}

SyntacticAlgorithm make_syntactic(ControlGraph g) {
  SyntacticAlgorithm a;
  std::set<std::string> seen;
  for (const auto& e : g.edges)
    if (seen.insert(e.label).second) a.labels.push_back(e.label);
  a.graph = std::move(g);
  return a;
}

SyntacticAlgorithm single_edge(const std::string& label) {
  ControlGraph g;
  g.initial = g.add_state("i");
  g.terminal = g.add_state("t");
  g.add_edge(0, 1, label);
  return make_syntactic(std::move(g));
}

namespace {

void require_in_frame(const std::set<std::string>& frame, const std::vector<std::string>& vars,
                      const std::string& label) {
  for (const auto& v : vars)
    if (!frame.count(v))
      throw Error(Errc::UnknownVariable, "label '" + label + "' uses '" + v + "' outside the frame");
}

}  // namespace

void SemanticAlgorithm::validate() const {
  syntax.validate();
  if (!structure) throw Error(Errc::SpecificationMismatch, "semantic algorithm without a structure");
  std::set<std::string> f(frame.begin(), frame.end());
  for (const auto& l : syntax.labels) {
    auto it = meaning.find(l);
    if (it == meaning.end()) throw Error(Errc::MissingLabel, "no meaning for label '" + l + "'");
    require_in_frame(f, it->second.inputs, l);
    require_in_frame(f, it->second.outputs, l);
  }
}

AnchoredOperation pipeline_anchor(std::string name, std::vector<AnchoredOperation> pipeline) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& st : pipeline)
    for (const auto* list : {&st.inputs, &st.outputs})
      for (const auto& v : *list)
        if (seen.insert(v).second) vars.push_back(v);
  auto m = compose_maps(std::move(name), vars, std::move(pipeline));
  return AnchoredOperation(std::move(m), vars, vars);
}

void LogicalAlgorithm::validate() const {
  syntax.validate();
  if (!theory) throw Error(Errc::SpecificationMismatch, "logical algorithm without a theory");
  auto sig = theory->signature();
  std::set<std::string> f(frame.begin(), frame.end());
  for (const auto& l : syntax.labels) {
    auto it = meaning.find(l);
    if (it == meaning.end() || it->second.empty()) throw Error(Errc::MissingLabel, "no meaning for label '" + l + "'");
    for (const auto& st : it->second) {
      require_in_frame(f, st.inputs, l);
      require_in_frame(f, st.outputs, l);
      if (auto fn = sig.functions.find(st.symbol); fn != sig.functions.end()) {
        if (st.inputs.size() != fn->second || st.outputs.size() != 1)
          throw Error(Errc::ArityMismatch, "function symbol " + st.symbol + " anchored with wrong arity in '" + l + "'");
      } else if (auto r = sig.relations.find(st.symbol); r != sig.relations.end()) {
        if (st.inputs.size() != r->second || st.outputs != st.inputs)
          throw Error(Errc::ArityMismatch, "relation symbol " + st.symbol + " must read and write the same " +
                                               std::to_string(r->second) + " variables in '" + l + "'");
      } else {
        throw Error(Errc::UnboundSymbol, "symbol " + st.symbol + " is not in theory " + theory->name);
      }
    }
  }
}

ModelCheckFailure::ModelCheckFailure(ModelCheckReport report)
    : Error(Errc::ModelCheckFailed, report.str()), report_(std::move(report)) {}

SemanticAlgorithm instantiate(const LogicalAlgorithm& logical, StructurePtr structure, const Binding& binding,
                              std::size_t sample_size, std::uint64_t seed) {
  logical.validate();
  auto report = check_model(*structure, *logical.theory, binding, sample_size, seed);
  if (!report.ok()) throw ModelCheckFailure(std::move(report));

  SemanticAlgorithm out;
  out.syntax = logical.syntax;
  out.structure = structure;
  out.frame = logical.frame;
  for (const auto& [label, stages] : logical.meaning) {
    std::vector<AnchoredOperation> ops;
    for (const auto& st : stages) {
      auto b = binding.find(st.symbol);
      if (b == binding.end()) throw Error(Errc::UnboundSymbol, "symbol " + st.symbol + " is not bound");
      ops.push_back(structure->anchor(b->second, st.inputs, st.outputs));
    }
    out.meaning.emplace(label, ops.size() == 1 ? ops.front() : pipeline_anchor(label, std::move(ops)));
  }
  out.validate();
  return out;
}

Program program_view(const SemanticAlgorithm& alg) {
  Program p;
  p.model = induced_model_name(alg.structure->name(), alg.frame);
  p.graph = alg.syntax.graph;
  for (auto& e : p.graph.edges) e.label = alg.meaning.at(e.label).name();
  return p;
}

ModelOfComputation algorithm_model(const SemanticAlgorithm& alg) {
  std::vector<AnchoredOperation> anchors;
  for (const auto& l : alg.syntax.labels) anchors.push_back(alg.meaning.at(l));
  return induced_model(*alg.structure, alg.frame, anchors);
}

Trace abstract_run(const SemanticAlgorithm& alg, const Environment& env, std::size_t budget) {
  alg.validate();
  Environment start;
  for (const auto& v : alg.frame)
    start.set(v, env.has(v) ? env.get(v) : alg.structure->domain().default_value);
  return run(algorithm_model(alg), program_view(alg), start, budget);
}

StructuralMap algorithm_map(std::string name, const SemanticAlgorithm& alg, std::vector<std::string> inputs,
                            std::vector<std::string> outputs, std::size_t budget) {
  alg.validate();
  auto model = std::make_shared<ModelOfComputation>(algorithm_model(alg));
  auto program = std::make_shared<Program>(program_view(alg));
  auto frame = alg.frame;
  auto init = alg.structure->domain().default_value;
  StructuralMap m;
  m.name = std::move(name);
  m.dom = inputs.size();
  m.im = outputs.size();
  m.fn = [=](std::span<const Value> args) -> std::optional<Tuple> {
    Environment env;
    for (const auto& v : frame) env.set(v, init);
    for (std::size_t i = 0; i < inputs.size(); ++i) env.set(inputs[i], args[i]);
    auto t = run(*model, *program, env, budget);
    if (t.outcome != Outcome::Terminated) return std::nullopt;
    const auto& out = std::get<Environment>(t.last().configuration);
    Tuple r;
    for (const auto& v : outputs) r.push_back(out.get(v));
    return r;
  };
  return m;
}

StructurePtr replace_map(const AbstractDataStructure& structure, StructuralMap m) {
  auto s = std::make_shared<AbstractDataStructure>(structure.name(), structure.domain());
  bool found = false;
  for (const auto& old : structure.maps()) {
    if (old.name == m.name) {
      s->add(m);
      found = true;
    } else {
      s->add(old);
    }
  }
  if (!found) throw Error(Errc::UnknownName, structure.name() + " has no map " + m.name);
  for (const auto& [a, b] : structure.disjoint_pairs()) s->declare_disjoint(a, b);
  return s;
}

}  // namespace algoglue
