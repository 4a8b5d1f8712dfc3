#include "algoglue/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "algoglue/corpus.hpp"
#include "algoglue/error.hpp"
#include "algoglue/logic.hpp"

namespace algoglue {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("key \"") + key + "\": " + e.what());
  }
}

json graph_json(const ControlGraph& g) {
  json j = json::object();
  j["states"] = g.states;
  j["initial"] = g.states.at(g.initial);
  j["terminal"] = g.states.at(g.terminal);
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"from", g.states.at(e.from)}, {"to", g.states.at(e.to)}, {"label", e.label}});
  j["edges"] = std::move(edges);
  return j;
}

ControlGraph graph_from(const json& j) {
  ControlGraph g;
  for (const auto& s : field<std::vector<std::string>>(j, "states")) {
    if (g.find_state(s) >= 0) throw Error(Errc::Parse, "duplicate state '" + s + "'");
    g.add_state(s);
  }
  g.initial = g.state(field<std::string>(j, "initial"));
  g.terminal = g.state(field<std::string>(j, "terminal"));
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(Errc::Parse, "missing key \"edges\"");
  for (const auto& e : j["edges"])
    g.add_edge(field<std::string>(e, "from"), field<std::string>(e, "to"), field<std::string>(e, "label"));
  return g;
}

json operation_json(const OperationSpec& op) {
  json j{{"map", op.map}, {"in", op.inputs}, {"out", op.outputs}};
  if (op.composite) {
    json pipeline = json::array();
    for (const auto& s : op.composite->pipeline) pipeline.push_back(operation_json(s));
    j["composite"] = json{{"frame", op.composite->frame},
                          {"in", op.composite->inputs},
                          {"out", op.composite->outputs},
                          {"pipeline", std::move(pipeline)}};
  }
  return j;
}

OperationSpec operation_from(const json& j) {
  OperationSpec op;
  op.map = field<std::string>(j, "map");
  op.inputs = field<std::vector<std::string>>(j, "in");
  op.outputs = field<std::vector<std::string>>(j, "out");
  if (j.contains("composite")) {
    const auto& c = j["composite"];
    auto comp = std::make_shared<OperationSpec::Composite>();
    comp->frame = field<std::vector<std::string>>(c, "frame");
    comp->inputs = field<std::vector<std::string>>(c, "in");
    comp->outputs = field<std::vector<std::string>>(c, "out");
    if (!c.contains("pipeline") || !c["pipeline"].is_array()) throw Error(Errc::Parse, "composite without pipeline");
    for (const auto& s : c["pipeline"]) comp->pipeline.push_back(operation_from(s));
    op.composite = std::move(comp);
  }
  return op;
}

json symbol_json(const SymbolAnchor& s) { return json{{"symbol", s.symbol}, {"in", s.inputs}, {"out", s.outputs}}; }

SymbolAnchor symbol_from(const json& j) {
  return {field<std::string>(j, "symbol"), field<std::vector<std::string>>(j, "in"),
          field<std::vector<std::string>>(j, "out")};
}

std::map<std::string, std::string> string_map(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_object()) throw Error(Errc::Parse, std::string("missing object \"") + key + "\"");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j[key].items()) {
    if (!v.is_string()) throw Error(Errc::Parse, "value of \"" + k + "\" must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

bool operator==(const OperationSpec& a, const OperationSpec& b) {
  if (a.map != b.map || a.inputs != b.inputs || a.outputs != b.outputs) return false;
  if (!a.composite || !b.composite) return !a.composite && !b.composite;
  const auto &x = *a.composite, &y = *b.composite;
  return x.frame == y.frame && x.inputs == y.inputs && x.outputs == y.outputs && x.pipeline == y.pipeline;
}

bool operator==(const AlgorithmDocument& a, const AlgorithmDocument& b) {
  return a.syntax == b.syntax && a.frame == b.frame && a.structure == b.structure && a.semantics == b.semantics &&
         a.theory == b.theory && a.symbols == b.symbols;
}

std::string write_program(const Program& p) {
  json j{{"model", p.model}};
  j.update(graph_json(p.graph));
  return dump(j);
}

Program read_program(std::string_view text) {
  auto j = parse_json(text);
  Program p;
  p.model = field<std::string>(j, "model");
  p.graph = graph_from(j);
  return p;
}

OperationSpec describe(const AnchoredOperation& op) {
  OperationSpec s{op.map.name, op.inputs, op.outputs, nullptr};
  if (op.map.composite) {
    auto c = std::make_shared<OperationSpec::Composite>();
    c->frame = op.map.composite->frame;
    c->inputs = op.map.composite->inputs;
    c->outputs = op.map.composite->outputs;
    for (const auto& stage : op.map.composite->pipeline) c->pipeline.push_back(describe(stage));
    s.composite = std::move(c);
  }
  return s;
}

std::string write_algorithm(const AlgorithmDocument& doc) {
  json j = graph_json(doc.syntax.graph);
  j["labels"] = doc.syntax.labels;
  j["frame"] = doc.frame;
  if (!doc.structure.empty()) {
    j["structure"] = doc.structure;
    json sem = json::object();
    for (const auto& l : doc.syntax.labels)
      if (auto it = doc.semantics.find(l); it != doc.semantics.end()) sem[l] = operation_json(it->second);
    j["semantics"] = std::move(sem);
  }
  if (!doc.theory.empty()) {
    j["theory"] = doc.theory;
    json sym = json::object();
    for (const auto& l : doc.syntax.labels) {
      auto it = doc.symbols.find(l);
      if (it == doc.symbols.end()) continue;
      if (it->second.size() == 1) {
        sym[l] = symbol_json(it->second.front());
      } else {
        json arr = json::array();
        for (const auto& s : it->second) arr.push_back(symbol_json(s));
        sym[l] = std::move(arr);
      }
    }
    j["symbols"] = std::move(sym);
  }
  return dump(j);
}

AlgorithmDocument read_algorithm(std::string_view text) {
  auto j = parse_json(text);
  AlgorithmDocument doc;
  doc.syntax.graph = graph_from(j);
  if (j.contains("labels"))
    doc.syntax.labels = field<std::vector<std::string>>(j, "labels");
  else
    doc.syntax = make_syntactic(doc.syntax.graph);
  if (j.contains("frame")) doc.frame = field<std::vector<std::string>>(j, "frame");
  if (j.contains("structure")) doc.structure = field<std::string>(j, "structure");
  if (j.contains("semantics")) {
    for (const auto& [label, v] : j["semantics"].items()) doc.semantics[label] = operation_from(v);
    if (doc.structure.empty()) throw Error(Errc::Parse, "\"semantics\" needs a \"structure\"");
  }
  if (j.contains("theory")) doc.theory = field<std::string>(j, "theory");
  if (j.contains("symbols")) {
    for (const auto& [label, v] : j["symbols"].items()) {
      auto& out = doc.symbols[label];
      if (v.is_array())
        for (const auto& s : v) out.push_back(symbol_from(s));
      else
        out.push_back(symbol_from(v));
    }
    if (doc.theory.empty()) throw Error(Errc::Parse, "\"symbols\" needs a \"theory\"");
  }
  doc.syntax.validate();
  return doc;
}

AlgorithmDocument document(const SyntacticAlgorithm& a) {
  AlgorithmDocument doc;
  doc.syntax = a;
  return doc;
}

AlgorithmDocument document(const SemanticAlgorithm& a) {
  AlgorithmDocument doc;
  doc.syntax = a.syntax;
  doc.frame = a.frame;
  doc.structure = a.structure->name();
  for (const auto& [label, op] : a.meaning) doc.semantics[label] = describe(op);
  return doc;
}

AlgorithmDocument document(const LogicalAlgorithm& a, const std::string& theory_ref) {
  AlgorithmDocument doc;
  doc.syntax = a.syntax;
  doc.frame = a.frame;
  doc.theory = theory_ref;
  doc.symbols = a.meaning;
  return doc;
}

std::string write_labelling(const LabellingDocument& doc) {
  json j{{"targets", doc.targets}};
  if (!doc.model.empty()) j["model"] = doc.model;
  j["map"] = json(doc.map);
  return dump(j);
}

LabellingDocument read_labelling(std::string_view text) {
  auto j = parse_json(text);
  LabellingDocument doc;
  doc.targets = field<std::string>(j, "targets");
  if (doc.targets != "programs" && doc.targets != "algorithms")
    throw Error(Errc::Parse, "\"targets\" must be \"programs\" or \"algorithms\"");
  if (j.contains("model")) doc.model = field<std::string>(j, "model");
  doc.map = string_map(j, "map");
  return doc;
}

std::string write_manifest(const ManifestDocument& doc) {
  return dump(json{{"interpretation", doc.interpretation}, {"structure", doc.structure}, {"programs", doc.programs}});
}

ManifestDocument read_manifest(std::string_view text) {
  auto j = parse_json(text);
  ManifestDocument doc;
  doc.interpretation = field<std::string>(j, "interpretation");
  doc.structure = field<std::string>(j, "structure");
  doc.programs = string_map(j, "programs");
  return doc;
}

Binding read_binding(std::string_view text) {
  auto j = parse_json(text);
  if (!j.is_object()) throw Error(Errc::Parse, "binding must be an object");
  Binding b;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw Error(Errc::Parse, "binding of \"" + k + "\" must be a string");
    b[k] = v.get<std::string>();
  }
  return b;
}

std::string write_binding(const Binding& b) { return dump(json(b)); }

std::string read_text_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::UnknownName, "cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const fs::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(Errc::UnknownName, "cannot write '" + p.string() + "'");
  out << text;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kBuiltin = "builtin:";
constexpr std::string_view kEdge = "edge:";

std::optional<std::string> builtin_name(const std::string& ref) {
  if (ref.rfind(kBuiltin, 0) == 0) return ref.substr(kBuiltin.size());
  return std::nullopt;
}

fs::path resolve(const std::string& ref, const fs::path& base) {
  fs::path p(ref);
  if (p.is_relative() && !base.empty()) return base / p;
  return p;
}

// A reference names a built-in when prefixed, or when it is a bare name
// with no file of that name.
template <class Map>
const typename Map::mapped_type* lookup(const Map& table, const std::string& ref, const fs::path& base) {
  if (auto name = builtin_name(ref)) {
    auto it = table.find(*name);
    if (it == table.end()) throw Error(Errc::UnknownName, "no built-in named '" + *name + "'");
    return &it->second;
  }
  auto it = table.find(ref);
  if (it != table.end() && !fs::exists(resolve(ref, base))) return &it->second;
  return nullptr;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

AlgorithmDocument single_edge_document(const std::string& label) { return document(single_edge(label)); }

}  // namespace

Workspace::Workspace() {
  for (auto s : {booleans(), naturals(), naturals_basic(), lists_of_naturals(), gf2_polynomials()})
    structures_[s->name()] = s;

  for (const auto& [name, b] : builtin_tm_programs()) programs_[name] = b.program;
  const auto gcd = corpus::gcd_programs();
  programs_["gcd_y0"] = gcd.map.at("y=0");
  programs_["gcd_yS"] = gcd.map.at("y!=0");
  programs_["gcd_return"] = gcd.map.at("return x");
  programs_["gcd_step"] = gcd.map.at("y=x mod y; x=y");
  programs_["gcd_glued"] = glue(corpus::gcd_A().syntax, gcd).program;

  auto add_semantic = [this](const std::string& name, const SemanticAlgorithm& a) {
    algorithms_[name] = document(a);
    for (const auto& [label, op] : a.meaning)
      if (op.map.composite) register_map(op.map);
  };
  add_semantic("gcd_A", corpus::gcd_A());
  add_semantic("gcd_B", corpus::gcd_B());
  add_semantic("gcd_A_free", corpus::gcd_A_free());
  add_semantic("remainder_sub", corpus::remainder_sub());
  add_semantic("mergesort", corpus::mergesort(corpus::SortOrder::Free));
  add_semantic("mergesort_ab", corpus::mergesort(corpus::SortOrder::AB));
  add_semantic("mergesort_ba", corpus::mergesort(corpus::SortOrder::BA));
  add_semantic("merge", corpus::merge_algorithm());
  add_semantic("sort_chain_ab", corpus::sort_chain(corpus::SortOrder::AB));
  add_semantic("sort_chain_ba", corpus::sort_chain(corpus::SortOrder::BA));
  const auto outer = corpus::mergesort_outer();
  for (const auto& [label, op] : outer.meaning)
    if (op.map.name == "merge") register_map(op.map);
  add_semantic("mergesort_outer", outer);
  algorithms_["gcd_logical"] = document(corpus::gcd_logical(), "builtin:euclidean");

  LabellingDocument gp{"programs", gcd.model, {}};
  gp.map = {{"y=0", "builtin:gcd_y0"},
            {"y!=0", "builtin:gcd_yS"},
            {"return x", "builtin:gcd_return"},
            {"y=x mod y; x=y", "builtin:gcd_step"}};
  labellings_["gcd_programs"] = gp;
  LabellingDocument rem{"algorithms", "", {}};
  for (const auto& l : corpus::gcd_A_free().syntax.labels)
    rem.map[l] = l == "rem" ? "builtin:remainder_sub" : std::string(kEdge) + l;
  labellings_["gcd_remainder"] = rem;
  LabellingDocument sorts{"algorithms", "", {}};
  for (const auto& l : corpus::mergesort().syntax.labels)
    sorts.map[l] = l == corpus::kSortBoth ? "builtin:sort_chain_ab" : std::string(kEdge) + l;
  labellings_["sort_ab"] = sorts;

  bindings_["euclidean"] = euclidean_binding();
}

StructurePtr Workspace::structure(const std::string& name) const {
  auto it = structures_.find(name);
  if (it == structures_.end()) throw Error(Errc::UnknownName, "no structure named '" + name + "'");
  return it->second;
}

Interpretation Workspace::interpretation(const std::string& name) const {
  if (name == "delta_bool") return delta_bool();
  if (name == "delta_nat_unary") return delta_nat_unary();
  if (name == "delta_nat_binary") return delta_nat_binary();
  throw Error(Errc::UnknownName, "no interpretation named '" + name + "'");
}

void Workspace::register_map(const StructuralMap& m) { maps_.insert_or_assign(m.name, m); }

const StructuralMap* Workspace::find_map(const AbstractDataStructure& s, const std::string& name) const {
  if (const auto* m = s.find(name)) return m;
  if (auto it = maps_.find(name); it != maps_.end()) return &it->second;
  return nullptr;
}

AnchoredOperation Workspace::operation(const OperationSpec& spec, const AbstractDataStructure& s) const {
  if (spec.map == kBottomLabel) return AnchoredOperation(bottom_map(), spec.inputs, spec.outputs);
  if (spec.composite) {
    std::vector<AnchoredOperation> stages;
    for (const auto& st : spec.composite->pipeline) stages.push_back(operation(st, s));
    auto m = compose_maps(spec.map, spec.composite->frame, spec.composite->inputs, spec.composite->outputs,
                          std::move(stages));
    return AnchoredOperation(std::move(m), spec.inputs, spec.outputs);
  }
  const auto* m = find_map(s, spec.map);
  if (!m) throw Error(Errc::UnknownName, "structure " + s.name() + " has no map '" + spec.map + "'");
  return AnchoredOperation(*m, spec.inputs, spec.outputs);
}

ModelOfComputation Workspace::model_for(const Program& p) const {
  if (p.model == "tm") return tm_model();
  auto open = p.model.find('[');
  if (open == std::string::npos || p.model.back() != ']')
    throw Error(Errc::UnknownName, "no model named '" + p.model + "'");
  auto s = structure(p.model.substr(0, open));
  std::vector<std::string> vars;
  for (const auto& v : split_top_level(std::string_view(p.model).substr(open + 1, p.model.size() - open - 2), ','))
    if (auto t = trim(v); !t.empty()) vars.push_back(t);
  std::vector<AnchoredOperation> anchors;
  std::set<std::string> seen;
  for (const auto& e : p.graph.edges) {
    if (!seen.insert(e.label).second) continue;
    auto a = parse_anchor_name(e.label);
    if (a.map == kBottomLabel) {
      anchors.emplace_back(bottom_map(), a.inputs, a.outputs);
      continue;
    }
    const auto* m = find_map(*s, a.map);
    if (!m) throw Error(Errc::UnknownInstruction, "'" + e.label + "' is not an anchored map of " + s->name());
    anchors.emplace_back(*m, a.inputs, a.outputs);
  }
  return induced_model(*s, vars, anchors);
}

Program Workspace::program(const std::string& ref, const fs::path& base) const {
  if (const auto* p = lookup(programs_, ref, base)) return *p;
  auto path = resolve(ref, base);
  if (!fs::exists(path)) throw Error(Errc::UnknownName, "no program named '" + ref + "'");
  return read_program(read_text_file(path));
}

AlgorithmDocument Workspace::algorithm(const std::string& ref, const fs::path& base) const {
  if (ref.rfind(kEdge, 0) == 0) return single_edge_document(ref.substr(kEdge.size()));
  if (const auto* a = lookup(algorithms_, ref, base)) return *a;
  auto path = resolve(ref, base);
  if (!fs::exists(path)) throw Error(Errc::UnknownName, "no algorithm named '" + ref + "'");
  return read_algorithm(read_text_file(path));
}

SemanticAlgorithm Workspace::semantic(const AlgorithmDocument& doc) {
  if (!doc.semantic()) throw Error(Errc::SpecificationMismatch, "algorithm has no semantics");
  SemanticAlgorithm a;
  a.syntax = doc.syntax;
  a.structure = structure(doc.structure);
  a.frame = doc.frame;
  for (const auto& [label, spec] : doc.semantics) {
    auto op = operation(spec, *a.structure);
    if (op.map.composite) register_map(op.map);
    a.meaning.emplace(label, std::move(op));
  }
  a.validate();
  return a;
}

std::shared_ptr<const Theory> Workspace::theory(const std::string& ref, const fs::path& base) const {
  if (ref == "builtin:euclidean" || (ref == "euclidean" && !fs::exists(resolve(ref, base))))
    return std::make_shared<Theory>(euclidean_theory());
  auto path = resolve(ref, base);
  if (!fs::exists(path)) throw Error(Errc::UnknownName, "no theory named '" + ref + "'");
  return std::make_shared<Theory>(parse_theory(path.stem().string(), read_text_file(path)));
}

LogicalAlgorithm Workspace::logical(const AlgorithmDocument& doc, const fs::path& base) const {
  if (!doc.logical()) throw Error(Errc::SpecificationMismatch, "algorithm has no theory");
  LogicalAlgorithm a;
  a.syntax = doc.syntax;
  a.theory = theory(doc.theory, base);
  a.frame = doc.frame;
  a.meaning = doc.symbols;
  a.validate();
  return a;
}

Binding Workspace::binding(const std::string& ref, const fs::path& base) const {
  if (const auto* b = lookup(bindings_, ref, base)) return *b;
  auto path = resolve(ref, base);
  if (!fs::exists(path)) throw Error(Errc::UnknownName, "no binding named '" + ref + "'");
  return read_binding(read_text_file(path));
}

ProgramLabelling Workspace::program_labelling(const std::string& ref) const {
  LabellingDocument doc;
  fs::path base;
  if (const auto* d = lookup(labellings_, ref, {})) {
    doc = *d;
  } else {
    if (!fs::exists(ref)) throw Error(Errc::UnknownName, "no labelling named '" + ref + "'");
    doc = read_labelling(read_text_file(ref));
    base = fs::path(ref).parent_path();
  }
  if (doc.targets != "programs") throw Error(Errc::SpecificationMismatch, "labelling targets algorithms");
  ProgramLabelling phi;
  phi.model = doc.model;
  for (const auto& [label, file] : doc.map) {
    auto p = program(file, base);
    if (phi.model.empty()) phi.model = p.model;
    phi.map.emplace(label, std::move(p));
  }
  return phi;
}

AlgorithmLabelling Workspace::algorithm_labelling(const std::string& ref) const {
  LabellingDocument doc;
  fs::path base;
  if (const auto* d = lookup(labellings_, ref, {})) {
    doc = *d;
  } else {
    if (!fs::exists(ref)) throw Error(Errc::UnknownName, "no labelling named '" + ref + "'");
    doc = read_labelling(read_text_file(ref));
    base = fs::path(ref).parent_path();
  }
  if (doc.targets != "algorithms") throw Error(Errc::SpecificationMismatch, "labelling targets programs");
  AlgorithmLabelling phi;
  for (const auto& [label, file] : doc.map) phi.emplace(label, algorithm(file, base).syntax);
  return phi;
}

ImplementationMap Workspace::manifest(const std::string& ref, std::string* structure_name) const {
  auto doc = read_manifest(read_text_file(ref));
  auto base = fs::path(ref).parent_path();
  ImplementationMap impl{interpretation(doc.interpretation), {}};
  for (const auto& [map, file] : doc.programs) impl.programs.emplace(map, program(file, base));
  if (structure_name) *structure_name = doc.structure;
  return impl;
}

std::vector<std::string> Workspace::builtin_programs() const { return keys(programs_); }
std::vector<std::string> Workspace::builtin_algorithms() const { return keys(algorithms_); }
std::vector<std::string> Workspace::builtin_structures() const { return keys(structures_); }

}  // namespace algoglue
