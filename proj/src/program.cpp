#include "algoglue/program.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "algoglue/error.hpp"

namespace algoglue {

int ControlGraph::add_state(std::string name) {
  states.push_back(std::move(name));
  return static_cast<int>(states.size()) - 1;
}

void ControlGraph::add_edge(int from, int to, std::string label) {
  edges.push_back(Edge{from, to, std::move(label)});
}

void ControlGraph::add_edge(std::string_view from, std::string_view to, std::string label) {
  add_edge(state(from), state(to), std::move(label));
}

int ControlGraph::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

int ControlGraph::state(std::string_view name) const {
  int s = find_state(name);
  if (s < 0) throw Error(Errc::UnknownName, "no state named '" + std::string(name) + "'");
  return s;
}

std::vector<std::size_t> ControlGraph::out_edges(int s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == s) out.push_back(i);
  return out;
}

void ControlGraph::validate() const {
  auto n = static_cast<int>(states.size());
  if (initial < 0 || initial >= n || terminal < 0 || terminal >= n)
    throw Error(Errc::ConventionViolation, "initial/terminal state out of range");
  std::set<std::string> names(states.begin(), states.end());
  if (names.size() != states.size()) throw Error(Errc::ConventionViolation, "duplicate state names");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw Error(Errc::ConventionViolation, "edge endpoint out of range");
    if (e.from == terminal)
      throw Error(Errc::ConventionViolation,
                  "edge '" + e.label + "' leaves the terminal state " + states[terminal]);
  }
}

void Program::validate(const ModelOfComputation& m) const {
  graph.validate();
  if (model != m.name())
    throw Error(Errc::SpecificationMismatch, "program is over model '" + model + "', not '" + m.name() + "'");
  for (const auto& e : graph.edges)
    if (!m.has(e.label))
      throw Error(Errc::UnknownInstruction, "'" + e.label + "' is not an instruction of " + m.name());
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Terminated: return "Terminated";
    case Outcome::Stuck: return "Stuck";
    case Outcome::OutOfBudget: return "OutOfBudget";
  }
  return "?";
}

std::vector<Successor> step(const ModelOfComputation& model, const Program& program,
                            const MachineState& state) {
  std::vector<Successor> out;
  const auto& edges = program.graph.edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].from != state.control) continue;
    if (auto next = model.apply(edges[i].label, state.configuration))
      out.push_back(Successor{i, MachineState{std::move(*next), edges[i].to}});
  }
  return out;
}

namespace {

struct Node {
  MachineState state;
  long parent;
  std::size_t edge;
  std::size_t depth;
  std::vector<std::size_t> succ;
};

std::string key_of(const MachineState& s) {
  return config_str(s.configuration) + "#" + std::to_string(s.control);
}

Trace path_to(const std::vector<Node>& nodes, std::size_t target, Outcome outcome) {
  Trace t;
  t.outcome = outcome;
  std::vector<std::size_t> chain;
  for (long i = static_cast<long>(target); i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
    chain.push_back(static_cast<std::size_t>(i));
  std::reverse(chain.begin(), chain.end());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    t.states.push_back(nodes[chain[k]].state);
    if (k > 0) t.edges.push_back(nodes[chain[k]].edge);
  }
  return t;
}

bool has_cycle(const std::vector<Node>& nodes) {
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<char> colour(nodes.size(), 0);
  for (std::size_t root = 0; root < nodes.size(); ++root) {
    if (colour[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      if (i < nodes[n].succ.size()) {
        auto m = nodes[n].succ[i++];
        if (colour[m] == 1) return true;
        if (colour[m] == 0) {
          colour[m] = 1;
          stack.emplace_back(m, 0);
        }
      } else {
        colour[n] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

Trace run(const ModelOfComputation& model, const Program& program, const Config& x0,
          std::size_t budget) {
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  MachineState start{x0, program.graph.initial};
  seen.emplace(key_of(start), 0);
  nodes.push_back(Node{std::move(start), -1, 0, 0, {}});

  long first_cut = -1;
  for (std::size_t cur = 0; cur < nodes.size(); ++cur) {
    if (nodes[cur].state.control == program.graph.terminal)
      return path_to(nodes, cur, Outcome::Terminated);
    auto succs = step(model, program, nodes[cur].state);
    if (succs.empty()) continue;
    if (nodes[cur].depth >= budget) {
      if (first_cut < 0) first_cut = static_cast<long>(cur);
      continue;
    }
    for (auto& s : succs) {
      auto key = key_of(s.state);
      auto [it, inserted] = seen.emplace(std::move(key), nodes.size());
      if (inserted) {
        nodes.push_back(Node{std::move(s.state), static_cast<long>(cur), s.edge, nodes[cur].depth + 1, {}});
      }
      nodes[cur].succ.push_back(it->second);
    }
  }

  if (first_cut >= 0) return path_to(nodes, static_cast<std::size_t>(first_cut), Outcome::OutOfBudget);
  if (has_cycle(nodes)) {
    Trace t;
    t.outcome = Outcome::OutOfBudget;
    t.states.push_back(nodes[0].state);
    return t;
  }

  // Every orbit is finite and avoids the terminal: follow the first enabled
  // edge until no successor remains.
  Trace t;
  t.outcome = Outcome::Stuck;
  t.states.push_back(nodes[0].state);
  std::size_t cur = 0;
  while (!nodes[cur].succ.empty()) {
    auto next = nodes[cur].succ.front();
    auto succs = step(model, program, nodes[cur].state);
    t.edges.push_back(succs.front().edge);
    t.states.push_back(nodes[next].state);
    cur = next;
  }
  return t;
}

Trace run_deterministic(const ModelOfComputation& model, const Program& program, const Config& x0,
                        std::size_t budget) {
  Trace t;
  t.states.push_back(MachineState{x0, program.graph.initial});
  while (true) {
    const auto& cur = t.states.back();
    if (cur.control == program.graph.terminal) {
      t.outcome = Outcome::Terminated;
      return t;
    }
    auto succs = step(model, program, cur);
    if (succs.empty()) {
      t.outcome = Outcome::Stuck;
      return t;
    }
    if (succs.size() > 1)
      throw Error(Errc::ConventionViolation,
                  "nondeterministic choice at state " + program.graph.states[cur.control]);
    if (t.steps() >= budget) {
      t.outcome = Outcome::OutOfBudget;
      return t;
    }
    t.edges.push_back(succs.front().edge);
    t.states.push_back(std::move(succs.front().state));
  }
}

bool replay(const ModelOfComputation& model, const Program& program, const Trace& trace) {
  if (trace.states.empty() || trace.states.size() != trace.edges.size() + 1) return false;
  if (trace.states.front().control != program.graph.initial) return false;
  for (std::size_t k = 0; k < trace.edges.size(); ++k) {
    if (trace.edges[k] >= program.graph.edges.size()) return false;
    const auto& e = program.graph.edges[trace.edges[k]];
    const auto& from = trace.states[k];
    const auto& to = trace.states[k + 1];
    if (e.from != from.control || e.to != to.control) return false;
    if (from.control == program.graph.terminal) return false;
    auto next = model.apply(e.label, from.configuration);
    if (!next || !(*next == to.configuration)) return false;
  }
  if (trace.outcome == Outcome::Terminated && trace.last().control != program.graph.terminal) return false;
  return true;
}

DeterminismReport check_local_determinism(const ModelOfComputation& model, const Program& program) {
  DeterminismReport report;
  for (int s = 0; s < static_cast<int>(program.graph.states.size()); ++s) {
    auto outs = program.graph.out_edges(s);
    for (std::size_t i = 0; i < outs.size(); ++i)
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        const auto& a = program.graph.edges[outs[i]].label;
        const auto& b = program.graph.edges[outs[j]].label;
        if (!model.disjoint(a, b)) report.flags.push_back(DeterminismFlag{s, outs[i], outs[j]});
      }
  }
  return report;
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const ControlGraph& graph, std::string_view name) {
  std::string out = "digraph " + dot_quote(name) + " {\n";
  out += "  __start [shape=point];\n";
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    bool term = static_cast<int>(i) == graph.terminal;
    out += "  " + dot_quote(graph.states[i]) + " [shape=" + (term ? "doublecircle" : "circle") + "];\n";
  }
  if (!graph.states.empty())
    out += "  __start -> " + dot_quote(graph.states[static_cast<std::size_t>(graph.initial)]) + ";\n";
  for (const auto& e : graph.edges) {
    out += "  " + dot_quote(graph.states[static_cast<std::size_t>(e.from)]) + " -> " +
           dot_quote(graph.states[static_cast<std::size_t>(e.to)]) + " [label=" + dot_quote(e.label) + "];\n";
  }
  return out + "}\n";
}

}  // namespace algoglue
