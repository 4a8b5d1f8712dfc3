#include "algoglue/glueing.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace algoglue {

ControlGraph glue_graph(const ControlGraph& a, const std::function<const ControlGraph&(std::size_t)>& component,
                        GlueTrace* trace) {
  ControlGraph g;
  std::set<std::string> names;
  auto fresh = [&](std::string name) {
    while (names.count(name)) name += "'";
    names.insert(name);
    return name;
  };
  for (std::size_t v = 0; v < a.states.size(); ++v) {
    g.add_state(fresh(a.states[v]));
    if (trace) trace->states.push_back({static_cast<int>(v), 0, -1});
  }
  g.initial = a.initial;
  g.terminal = a.terminal;
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    const auto& e = a.edges[k];
    const auto& c = component(k);
    if (c.initial == c.terminal)
      throw Error(Errc::ConventionViolation, "component for edge " + std::to_string(k) +
                                                 " has the same initial and terminal state");
    std::vector<int> image(c.states.size());
    for (std::size_t s = 0; s < c.states.size(); ++s) {
      if (static_cast<int>(s) == c.initial) {
        image[s] = e.from;
      } else if (static_cast<int>(s) == c.terminal) {
        image[s] = e.to;
      } else {
        image[s] = g.add_state(fresh("e" + std::to_string(k) + ":" + c.states[s]));
        if (trace) trace->states.push_back({-1, k, static_cast<int>(s)});
      }
    }
    for (std::size_t j = 0; j < c.edges.size(); ++j) {
      const auto& ce = c.edges[j];
      g.add_edge(image[ce.from], image[ce.to], ce.label);
      if (trace) trace->edges.push_back({k, j});
    }
  }
  return g;
}

std::vector<ControlGraph> preglue(const SyntacticAlgorithm& a, const ProgramLabelling& phi) {
  std::vector<ControlGraph> copies;
  for (std::size_t k = 0; k < a.graph.edges.size(); ++k) {
    auto it = phi.map.find(a.graph.edges[k].label);
    if (it == phi.map.end()) throw Error(Errc::MissingLabel, "no program for label '" + a.graph.edges[k].label + "'");
    auto c = it->second.graph;
    for (auto& s : c.states) s = "e" + std::to_string(k) + ":" + s;
    copies.push_back(std::move(c));
  }
  return copies;
}

namespace {

template <class Map>
const auto& lookup(const Map& phi, const std::string& label) {
  auto it = phi.find(label);
  if (it == phi.end()) throw Error(Errc::MissingLabel, "labelling has no entry for '" + label + "'");
  return it->second;
}

// Labels of the components used, in edge order, each once.
template <class Map, class Get>
std::vector<std::string> union_labels(const SyntacticAlgorithm& a, const Map& phi, Get syntax_of) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& e : a.graph.edges)
    for (const auto& l : syntax_of(lookup(phi, e.label)).labels)
      if (seen.insert(l).second) out.push_back(l);
  return out;
}

void union_frame(std::vector<std::string>& frame, const std::vector<std::string>& more) {
  for (const auto& v : more)
    if (std::find(frame.begin(), frame.end(), v) == frame.end()) frame.push_back(v);
}

}  // namespace

GlueResult glue(const SyntacticAlgorithm& a, const ProgramLabelling& phi) {
  a.validate();
  GlueResult r;
  std::string model = phi.model;
  for (const auto& e : a.graph.edges) {
    const auto& p = lookup(phi.map, e.label);
    if (model.empty()) model = p.model;
    if (p.model != model)
      throw Error(Errc::SpecificationMismatch, "labelling mixes models " + model + " and " + p.model);
  }
  r.program.model = model;
  r.program.graph = glue_graph(
      a.graph, [&](std::size_t k) -> const ControlGraph& { return phi.map.at(a.graph.edges[k].label).graph; },
      &r.trace);
  r.program.graph.validate();
  return r;
}

SyntacticAlgorithm glue_alg(const SyntacticAlgorithm& a, const AlgorithmLabelling& phi) {
  a.validate();
  auto syntax = [](const SyntacticAlgorithm& s) -> const SyntacticAlgorithm& { return s; };
  SyntacticAlgorithm out;
  out.labels = union_labels(a, phi, syntax);
  out.graph = glue_graph(a.graph, [&](std::size_t k) -> const ControlGraph& {
    return phi.at(a.graph.edges[k].label).graph;
  });
  out.validate();
  return out;
}

SemanticAlgorithm glue_alg(const SyntacticAlgorithm& a, const SemanticLabelling& phi) {
  a.validate();
  SemanticAlgorithm out;
  out.syntax.labels = union_labels(a, phi, [](const SemanticAlgorithm& s) -> const SyntacticAlgorithm& {
    return s.syntax;
  });
  for (const auto& e : a.graph.edges) {
    const auto& c = phi.at(e.label);
    if (!out.structure) out.structure = c.structure;
    if (c.structure->name() != out.structure->name())
      throw Error(Errc::SpecificationMismatch, "components over " + out.structure->name() + " and " +
                                                   c.structure->name());
    union_frame(out.frame, c.frame);
    for (const auto& l : c.syntax.labels) {
      const auto& op = c.meaning.at(l);
      auto [it, fresh] = out.meaning.emplace(l, op);
      if (!fresh && it->second.name() != op.name())
        throw Error(Errc::SpecificationMismatch, "label '" + l + "' means both " + it->second.name() + " and " +
                                                     op.name());
    }
  }
  if (!out.structure && !phi.empty()) out.structure = phi.begin()->second.structure;
  out.syntax.graph = glue_graph(a.graph, [&](std::size_t k) -> const ControlGraph& {
    return phi.at(a.graph.edges[k].label).syntax.graph;
  });
  out.validate();
  return out;
}

namespace {

bool same_pipeline(const std::vector<SymbolAnchor>& x, const std::vector<SymbolAnchor>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].symbol != y[i].symbol || x[i].inputs != y[i].inputs || x[i].outputs != y[i].outputs) return false;
  return true;
}

}  // namespace

LogicalAlgorithm glue_alg(const SyntacticAlgorithm& a, const LogicalLabelling& phi) {
  a.validate();
  LogicalAlgorithm out;
  out.syntax.labels = union_labels(a, phi, [](const LogicalAlgorithm& s) -> const SyntacticAlgorithm& {
    return s.syntax;
  });
  for (const auto& e : a.graph.edges) {
    const auto& c = phi.at(e.label);
    if (!out.theory) out.theory = c.theory;
    if (c.theory->name != out.theory->name)
      throw Error(Errc::SpecificationMismatch, "components over theories " + out.theory->name + " and " +
                                                   c.theory->name);
    union_frame(out.frame, c.frame);
    for (const auto& l : c.syntax.labels) {
      const auto& m = c.meaning.at(l);
      auto [it, fresh] = out.meaning.emplace(l, m);
      if (!fresh && !same_pipeline(it->second, m))
        throw Error(Errc::SpecificationMismatch, "label '" + l + "' has two different meanings");
    }
  }
  if (!out.theory && !phi.empty()) out.theory = phi.begin()->second.theory;
  out.syntax.graph = glue_graph(a.graph, [&](std::size_t k) -> const ControlGraph& {
    return phi.at(a.graph.edges[k].label).syntax.graph;
  });
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct GraphIndex {
  const ControlGraph& g;
  std::map<std::pair<int, int>, std::vector<std::string>> adj;
  std::vector<std::vector<int>> neighbours;
  std::vector<std::string> signature;

  explicit GraphIndex(const ControlGraph& graph) : g(graph) {
    auto n = g.states.size();
    std::vector<std::vector<std::string>> outs(n), ins(n);
    std::vector<std::set<int>> nb(n);
    for (const auto& e : g.edges) {
      adj[{e.from, e.to}].push_back(e.label);
      outs[e.from].push_back(e.label);
      ins[e.to].push_back(e.label);
      if (e.from != e.to) {
        nb[e.from].insert(e.to);
        nb[e.to].insert(e.from);
      }
    }
    for (auto& [_, v] : adj) std::sort(v.begin(), v.end());
    for (std::size_t s = 0; s < n; ++s) {
      std::sort(outs[s].begin(), outs[s].end());
      std::sort(ins[s].begin(), ins[s].end());
      std::string sig;
      for (const auto& l : outs[s]) sig += l + '\x1f';
      sig += '\x1e';
      for (const auto& l : ins[s]) sig += l + '\x1f';
      sig += '\x1e';
      auto self = adj.find({static_cast<int>(s), static_cast<int>(s)});
      if (self != adj.end())
        for (const auto& l : self->second) sig += l + '\x1f';
      signature.push_back(std::move(sig));
      neighbours.emplace_back(nb[s].begin(), nb[s].end());
    }
  }

  const std::vector<std::string>& labels(int a, int b) const {
    static const std::vector<std::string> none;
    auto it = adj.find({a, b});
    return it == adj.end() ? none : it->second;
  }
};

class IsoSearch {
 public:
  IsoSearch(const ControlGraph& g1, const ControlGraph& g2) : a_(g1), b_(g2) {}

  std::optional<std::vector<int>> solve() {
    const auto& g1 = a_.g;
    const auto& g2 = b_.g;
    auto n = g1.states.size();
    if (n != g2.states.size() || g1.edges.size() != g2.edges.size()) return std::nullopt;
    if ((g1.initial == g1.terminal) != (g2.initial == g2.terminal)) return std::nullopt;
    auto s1 = a_.signature, s2 = b_.signature;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;

    // Breadth-first order from the initial state, then the terminal state,
    // then everything else, so most states have a mapped neighbour.
    std::vector<char> placed(n, 0);
    auto bfs = [&](int root) {
      if (placed[root]) return;
      std::deque<int> q{root};
      placed[root] = 1;
      while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        order_.push_back(s);
        for (int u : a_.neighbours[s])
          if (!placed[u]) {
            placed[u] = 1;
            q.push_back(u);
          }
      }
    };
    if (n > 0) {
      bfs(g1.initial);
      bfs(g1.terminal);
      for (std::size_t s = 0; s < n; ++s) bfs(static_cast<int>(s));
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool consistent(int s, int t) const {
    if (a_.signature[s] != b_.signature[t]) return false;
    std::size_t mapped_a = 0;
    for (int u : a_.neighbours[s]) {
      int mu = map_[u];
      if (mu < 0) continue;
      ++mapped_a;
      if (a_.labels(s, u) != b_.labels(t, mu) || a_.labels(u, s) != b_.labels(mu, t)) return false;
    }
    std::size_t mapped_b = 0;
    for (int w : b_.neighbours[t])
      if (used_[w]) ++mapped_b;
    return mapped_a == mapped_b;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    int s = order_[k];
    const auto& g1 = a_.g;
    const auto& g2 = b_.g;
    std::vector<int> candidates;
    if (s == g1.initial) {
      candidates.push_back(g2.initial);
    } else if (s == g1.terminal) {
      candidates.push_back(g2.terminal);
    } else {
      int anchor = -1;
      for (int u : a_.neighbours[s])
        if (map_[u] >= 0) {
          anchor = map_[u];
          break;
        }
      if (anchor >= 0) {
        candidates = b_.neighbours[anchor];
      } else {
        for (std::size_t t = 0; t < g2.states.size(); ++t) candidates.push_back(static_cast<int>(t));
      }
      std::erase_if(candidates, [&](int t) { return t == g2.initial || t == g2.terminal; });
    }
    for (int t : candidates) {
      if (used_[t] || !consistent(s, t)) continue;
      map_[s] = t;
      used_[t] = 1;
      if (extend(k + 1)) return true;
      map_[s] = -1;
      used_[t] = 0;
    }
    return false;
  }

  GraphIndex a_;
  GraphIndex b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Isomorphism> graph_isomorphic(const ControlGraph& g1, const ControlGraph& g2) {
  auto states = IsoSearch(g1, g2).solve();
  if (!states) return std::nullopt;
  std::map<std::tuple<int, int, std::string>, std::deque<std::size_t>> pool;
  for (std::size_t j = 0; j < g2.edges.size(); ++j) {
    const auto& e = g2.edges[j];
    pool[{e.from, e.to, e.label}].push_back(j);
  }
  Isomorphism iso;
  iso.states = *states;
  for (const auto& e : g1.edges) {
    auto& q = pool[{iso.states[e.from], iso.states[e.to], e.label}];
    if (q.empty()) return std::nullopt;
    iso.edges.push_back(q.front());
    q.pop_front();
  }
  return iso;
}

Isomorphism inverse(const Isomorphism& iso) {
  Isomorphism inv;
  inv.states.assign(iso.states.size(), -1);
  inv.edges.assign(iso.edges.size(), 0);
  for (std::size_t s = 0; s < iso.states.size(); ++s) inv.states[iso.states[s]] = static_cast<int>(s);
  for (std::size_t e = 0; e < iso.edges.size(); ++e) inv.edges[iso.edges[e]] = e;
  return inv;
}

Isomorphism compose(const Isomorphism& first, const Isomorphism& second) {
  Isomorphism c;
  for (int s : first.states) c.states.push_back(second.states[s]);
  for (auto e : first.edges) c.edges.push_back(second.edges[e]);
  return c;
}

bool is_isomorphism(const ControlGraph& g1, const ControlGraph& g2, const Isomorphism& iso) {
  if (iso.states.size() != g1.states.size() || g1.states.size() != g2.states.size()) return false;
  if (iso.edges.size() != g1.edges.size() || g1.edges.size() != g2.edges.size()) return false;
  std::vector<char> hit_s(g2.states.size(), 0), hit_e(g2.edges.size(), 0);
  for (int t : iso.states) {
    if (t < 0 || t >= static_cast<int>(g2.states.size()) || hit_s[t]) return false;
    hit_s[t] = 1;
  }
  if (iso.states[g1.initial] != g2.initial || iso.states[g1.terminal] != g2.terminal) return false;
  for (std::size_t e = 0; e < g1.edges.size(); ++e) {
    auto j = iso.edges[e];
    if (j >= g2.edges.size() || hit_e[j]) return false;
    hit_e[j] = 1;
    const auto& x = g1.edges[e];
    const auto& y = g2.edges[j];
    if (iso.states[x.from] != y.from || iso.states[x.to] != y.to || x.label != y.label) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Implementation relation

ImplementsVerdict check_implements(const Program& p, const SyntacticAlgorithm& a, const ProgramLabelling& phi) {
  ImplementsVerdict v;
  GlueResult g;
  try {
    g = glue(a, phi);
  } catch (const Error& e) {
    v.reason = e.what();
    return v;
  }
  if (!a.graph.edges.empty() && g.program.model != p.model) {
    v.reason = "program runs over " + p.model + ", the labelling over " + g.program.model;
    return v;
  }
  v.witness = graph_isomorphic(g.program.graph, p.graph);
  v.implements = v.witness.has_value();
  if (!v.implements) v.reason = "the program is not isomorphic to the glueing";
  return v;
}

namespace {

std::map<std::string, std::size_t> label_counts(const ControlGraph& g) {
  std::map<std::string, std::size_t> c;
  for (const auto& e : g.edges) ++c[e.label];
  return c;
}

}  // namespace

std::optional<ProgramLabelling> search_implementation(const Program& p, const SyntacticAlgorithm& a,
                                                      const std::vector<std::pair<std::string, Program>>& library,
                                                      std::size_t bound) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> uses;
  for (const auto& e : a.graph.edges)
    if (uses[e.label]++ == 0) labels.push_back(e.label);
  if (library.empty() && !a.labels.empty()) return std::nullopt;

  const auto target_states = p.graph.states.size();
  const auto target_edges = p.graph.edges.size();
  const auto target_labels = label_counts(p.graph);
  std::vector<std::size_t> choice(labels.size(), 0);
  std::size_t checked = 0;

  auto fill = [&]() {
    ProgramLabelling phi;
    phi.model = p.model;
    for (std::size_t i = 0; i < labels.size(); ++i) phi.map[labels[i]] = library[choice[i]].second;
    for (const auto& l : a.labels)
      if (!phi.map.count(l)) phi.map[l] = library.front().second;
    return phi;
  };

  std::function<std::optional<ProgramLabelling>(std::size_t, std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t states, std::size_t edges) -> std::optional<ProgramLabelling> {
    if (states > target_states || edges > target_edges) return std::nullopt;
    if (i == labels.size()) {
      if (states != target_states || edges != target_edges) return std::nullopt;
      std::map<std::string, std::size_t> counts;
      for (std::size_t j = 0; j < labels.size(); ++j)
        for (const auto& [l, c] : label_counts(library[choice[j]].second.graph)) counts[l] += c * uses[labels[j]];
      if (counts != target_labels) return std::nullopt;
      if (checked++ >= bound) return std::nullopt;
      auto phi = fill();
      if (check_implements(p, a, phi).implements) return phi;
      return std::nullopt;
    }
    for (std::size_t c = 0; c < library.size() && checked < bound; ++c) {
      const auto& q = library[c].second;
      if (q.model != p.model || q.graph.initial == q.graph.terminal) continue;
      choice[i] = c;
      auto k = uses[labels[i]];
      if (auto r = go(i + 1, states + k * (q.graph.states.size() - 2), edges + k * q.graph.edges.size())) return r;
    }
    return std::nullopt;
  };
  return go(0, a.graph.states.size(), 0);
}

bool CoherenceReport::coherent() const {
  return std::all_of(labels.begin(), labels.end(), [](const auto& kv) { return kv.second.pass; });
}

CoherenceReport check_coherent(const ProgramLabelling& phi, const SemanticAlgorithm& alg,
                               const ModelOfComputation& model, const Interpretation& delta,
                               std::size_t samples, std::size_t budget, std::uint64_t seed) {
  CoherenceReport r;
  const auto& dom = alg.structure->domain();
  for (const auto& label : alg.syntax.labels) {
    const auto& prog = lookup(phi.map, label);
    prog.validate(model);
    const auto& f = alg.meaning.at(label).map;
    auto tuples = test_tuples(dom, f.dom, samples, seed, label);
    auto v = verify_map(model, f, prog, delta, tuples, budget);
    v.map = label;
    r.labels.emplace(label, std::move(v));
  }
  return r;
}

ProgramLabelling compose_labellings(const SyntacticAlgorithm& a, const AlgorithmLabelling& phi,
                                    const ProgramLabelling& psi) {
  ProgramLabelling theta;
  theta.model = psi.model;
  std::set<std::string> used;
  for (const auto& e : a.graph.edges) used.insert(e.label);
  for (const auto& l : a.labels) {
    auto it = phi.find(l);
    if (it == phi.end()) {
      if (used.count(l)) throw Error(Errc::MissingLabel, "no algorithm for label '" + l + "'");
      continue;
    }
    theta.map[l] = glue(it->second, psi).program;
    if (theta.model.empty()) theta.model = theta.map[l].model;
  }
  return theta;
}

// ---------------------------------------------------------------------------
// Unfolding

SyntacticAlgorithm unfold(const SyntacticAlgorithm& alg, const std::string& label, int depth) {
  if (depth <= 0) {
    SyntacticAlgorithm out = alg;
    for (auto& e : out.graph.edges)
      if (e.label == label) e.label = kBottomLabel;
    return make_syntactic(std::move(out.graph));
  }
  auto inner = unfold(alg, label, depth - 1);
  AlgorithmLabelling phi;
  for (const auto& l : alg.labels) phi[l] = l == label ? inner : single_edge(l);
  return glue_alg(alg, phi);
}

namespace {

bool is_call_site(const AnchoredOperation& op, const std::string& label) {
  if (op.map.composite) {
    for (const auto& st : op.map.composite->pipeline)
      if (is_call_site(st, label) || st.map.name == label)
        throw Error(Errc::SpecificationMismatch, "composite label " + op.map.name + " calls " + label +
                                                     "; refine it into separate edges first");
    return false;
  }
  return op.map.name == label && op.inputs.size() == 1 && op.inputs == op.outputs;
}

SemanticAlgorithm single_edge(const std::string& label, const AnchoredOperation& op, StructurePtr structure) {
  SemanticAlgorithm s;
  s.syntax = algoglue::single_edge(label);
  s.structure = std::move(structure);
  for (const auto* list : {&op.inputs, &op.outputs}) union_frame(s.frame, *list);
  s.meaning.emplace(label, op);
  return s;
}

SemanticAlgorithm renamed_copy(const SemanticAlgorithm& alg, const std::string& io, const std::string& var,
                               const std::string& tag) {
  auto rename = [&](const std::string& v) { return v == io ? var : v + "_" + tag; };
  auto relabel = [&](const std::string& l) { return l + "/" + tag; };
  SemanticAlgorithm c;
  c.structure = alg.structure;
  for (const auto& v : alg.frame) c.frame.push_back(rename(v));
  c.syntax = alg.syntax;
  for (auto& l : c.syntax.labels) l = relabel(l);
  for (auto& e : c.syntax.graph.edges) e.label = relabel(e.label);
  for (const auto& [l, op] : alg.meaning) c.meaning.emplace(relabel(l), op.renamed(rename));
  return c;
}

}  // namespace

SemanticAlgorithm unfold(const SemanticAlgorithm& alg, const std::string& label, int depth, const std::string& io) {
  alg.validate();
  const std::string var = io.empty() ? alg.frame.at(0) : io;
  std::vector<std::size_t> sites;
  for (std::size_t k = 0; k < alg.syntax.graph.edges.size(); ++k)
    if (is_call_site(alg.meaning.at(alg.syntax.graph.edges[k].label), label)) sites.push_back(k);

  if (depth <= 0) {
    SemanticAlgorithm out = alg;
    for (auto k : sites) out.syntax.graph.edges[k].label = kBottomLabel;
    out.syntax = make_syntactic(std::move(out.syntax.graph));
    out.meaning.clear();
    for (const auto& l : out.syntax.labels)
      out.meaning.emplace(l, l == kBottomLabel ? AnchoredOperation(bottom_map(), {}, {}) : alg.meaning.at(l));
    return out;
  }

  auto inner = unfold(alg, label, depth - 1, var);
  // Each call site gets its own label so that it can receive its own copy.
  auto syntax = alg.syntax;
  SemanticLabelling phi;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    auto& e = syntax.graph.edges[sites[i]];
    const auto& site = alg.meaning.at(e.label);
    auto tag = std::to_string(i + 1);
    e.label = e.label + "#" + tag;
    syntax.labels.push_back(e.label);
    phi.emplace(e.label, renamed_copy(inner, var, site.inputs[0], tag));
  }
  for (const auto& e : syntax.graph.edges)
    if (!phi.count(e.label)) phi.emplace(e.label, single_edge(e.label, alg.meaning.at(e.label), alg.structure));
  std::erase_if(syntax.labels, [&](const std::string& l) { return !phi.count(l); });

  auto out = glue_alg(syntax, phi);
  std::vector<std::string> frame = alg.frame;
  union_frame(frame, out.frame);
  out.frame = std::move(frame);
  return out;
}

}  // namespace algoglue
