#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "algoglue/model.hpp"

namespace algoglue {

struct Edge {
  int from = 0;
  int to = 0;
  std::string label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite directed multigraph with string-labelled edges and distinguished
/// initial and terminal states. Shared by programs and algorithms.
struct ControlGraph {
  std::vector<std::string> states;
  std::vector<Edge> edges;
  int initial = 0;
  int terminal = 0;

  int add_state(std::string name);
  void add_edge(int from, int to, std::string label);
  void add_edge(std::string_view from, std::string_view to, std::string label);

  /// -1 when absent.
  int find_state(std::string_view name) const;
  int state(std::string_view name) const;  // throws UnknownName

  /// Edge indices leaving `s`, in insertion order.
  std::vector<std::size_t> out_edges(int s) const;

  /// Endpoints in range, initial/terminal valid, no edge leaves the terminal,
  /// state names unique. Throws ConventionViolation.
  void validate() const;

  friend bool operator==(const ControlGraph&, const ControlGraph&) = default;
};

/// An alpha-program: a control graph whose labels are instructions of the
/// model named `model`.
struct Program {
  std::string model;
  ControlGraph graph;

  /// Graph conventions plus every label being an instruction of `m`.
  void validate(const ModelOfComputation& m) const;

  friend bool operator==(const Program&, const Program&) = default;
};

struct MachineState {
  Config configuration;
  int control = 0;
};

enum class Outcome { Terminated, Stuck, OutOfBudget };
const char* to_string(Outcome o);

/// A finite orbit. `states[k+1]` is reached from `states[k]` via `edges[k]`.
struct Trace {
  std::vector<MachineState> states;
  std::vector<std::size_t> edges;
  Outcome outcome = Outcome::OutOfBudget;

  std::size_t steps() const { return edges.size(); }
  const MachineState& last() const { return states.back(); }
};

struct Successor {
  std::size_t edge;
  MachineState state;
};

/// One successor per enabled out-edge of `state.control`, in edge order.
std::vector<Successor> step(const ModelOfComputation& model, const Program& program,
                            const MachineState& state);

/// Breadth-first exploration of the program's dynamics from (x0, initial).
///
/// Terminated: the shortest path to the terminal state, ties broken by edge
/// insertion order. Stuck: every orbit is finite and none reaches the
/// terminal; the trace follows the first enabled edge at every step.
/// OutOfBudget: otherwise (some orbit exceeds `budget` steps or cycles).
Trace run(const ModelOfComputation& model, const Program& program, const Config& x0,
          std::size_t budget);

/// Follows the unique enabled edge at every step. Throws ConventionViolation
/// if a reached state has more than one enabled edge.
Trace run_deterministic(const ModelOfComputation& model, const Program& program, const Config& x0,
                        std::size_t budget);

/// Re-applies each recorded edge; true iff the trace is a valid orbit prefix
/// starting at the program's initial state.
bool replay(const ModelOfComputation& model, const Program& program, const Trace& trace);

struct DeterminismFlag {
  int state;
  std::size_t edge_a;
  std::size_t edge_b;
};

struct DeterminismReport {
  std::vector<DeterminismFlag> flags;
  bool clean() const { return flags.empty(); }
};

/// Flags every pair of out-edges of a state whose labels the model does not
/// declare domain-disjoint.
DeterminismReport check_local_determinism(const ModelOfComputation& model, const Program& program);

/// Graphviz rendering. The initial state gets an inbound arrow from a point
/// node, the terminal state is drawn as a double circle.
std::string to_dot(const ControlGraph& graph, std::string_view name = "G");

}  // namespace algoglue
