#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algoglue/algorithms.hpp"
#include "algoglue/representation.hpp"

namespace algoglue {

/// Label -> program, all over one model.
struct ProgramLabelling {
  std::string model;
  std::map<std::string, Program> map;
};

using AlgorithmLabelling = std::map<std::string, SyntacticAlgorithm>;
using SemanticLabelling = std::map<std::string, SemanticAlgorithm>;
using LogicalLabelling = std::map<std::string, LogicalAlgorithm>;

/// Where a glued state or edge came from. A state either is the image of an
/// algorithm vertex (`vertex` >= 0) or an internal state of the copy for
/// algorithm edge `edge`.
struct GlueTrace {
  struct StateOrigin {
    int vertex = -1;
    std::size_t edge = 0;
    int component_state = -1;
  };
  struct EdgeOrigin {
    std::size_t edge = 0;
    std::size_t component_edge = 0;
  };
  std::vector<StateOrigin> states;
  std::vector<EdgeOrigin> edges;
};

/// The per-edge copies before identification. Copy k belongs to algorithm
/// edge k; its states are named "e<k>:<state>".
std::vector<ControlGraph> preglue(const SyntacticAlgorithm& a, const ProgramLabelling& phi);

/// Substitutes component(e) for every edge e of `a` and identifies the
/// component boundaries at the algorithm vertices. Vertices keep their names;
/// internal states are named "e<k>:<state>". Components must have distinct
/// initial and terminal states (ConventionViolation).
ControlGraph glue_graph(const ControlGraph& a, const std::function<const ControlGraph&(std::size_t)>& component,
                        GlueTrace* trace = nullptr);

struct GlueResult {
  Program program;
  GlueTrace trace;
};

/// Throws MissingLabel when phi lacks a label used on an edge.
GlueResult glue(const SyntacticAlgorithm& a, const ProgramLabelling& phi);

/// Algorithm-level glueing. The declared labels of the result are those of
/// the components used, in edge order.
SyntacticAlgorithm glue_alg(const SyntacticAlgorithm& a, const AlgorithmLabelling& phi);
/// Meanings and frames are inherited from the components, which must share
/// one structure and agree on shared labels (SpecificationMismatch).
SemanticAlgorithm glue_alg(const SyntacticAlgorithm& a, const SemanticLabelling& phi);
LogicalAlgorithm glue_alg(const SyntacticAlgorithm& a, const LogicalLabelling& phi);

struct Isomorphism {
  std::vector<int> states;          // state of G1 -> state of G2
  std::vector<std::size_t> edges;   // edge of G1 -> edge of G2
};

/// Labelled-graph isomorphism preserving initial and terminal states. The
/// search is deterministic: the first witness in a fixed order is returned.
std::optional<Isomorphism> graph_isomorphic(const ControlGraph& g1, const ControlGraph& g2);

Isomorphism inverse(const Isomorphism& iso);
Isomorphism compose(const Isomorphism& first, const Isomorphism& second);
/// True iff `iso` maps g1 onto g2 respecting edges, labels, initial, terminal.
bool is_isomorphism(const ControlGraph& g1, const ControlGraph& g2, const Isomorphism& iso);

struct ImplementsVerdict {
  bool implements = false;
  std::optional<Isomorphism> witness;  // from glue(A, phi) to P
  std::string reason;
};

/// True iff P is isomorphic to glue(A, phi) and runs over phi's model.
ImplementsVerdict check_implements(const Program& p, const SyntacticAlgorithm& a, const ProgramLabelling& phi);

/// First labelling in lexicographic library order (labels in declaration
/// order) under which P implements A; at most `bound` candidates are checked.
std::optional<ProgramLabelling> search_implementation(const Program& p, const SyntacticAlgorithm& a,
                                                      const std::vector<std::pair<std::string, Program>>& library,
                                                      std::size_t bound);

struct CoherenceReport {
  std::map<std::string, MapVerdict> labels;
  bool coherent() const;
};

/// verify_map of phi(o) against the structural map of [[o]] for every label.
CoherenceReport check_coherent(const ProgramLabelling& phi, const SemanticAlgorithm& alg,
                               const ModelOfComputation& model, const Interpretation& delta,
                               std::size_t samples, std::size_t budget, std::uint64_t seed = 0);

/// theta(o) = glue(phi(o), psi), for every label of A carried by phi.
ProgramLabelling compose_labellings(const SyntacticAlgorithm& a, const AlgorithmLabelling& phi,
                                    const ProgramLabelling& psi);

inline constexpr const char* kBottomLabel = "bottom";

/// A[label <- A] iterated `depth` times; surviving `label` edges become
/// `bottom` edges.
SyntacticAlgorithm unfold(const SyntacticAlgorithm& alg, const std::string& label, int depth);

/// Semantic unfolding. Call sites are edges whose meaning applies the map
/// named `label` to one variable v in place. Each substituted copy reads and
/// writes v where the algorithm uses `io` (default: first frame variable);
/// its other variables get a fresh suffix and its labels a "/<k>" suffix.
/// Surviving call sites are anchored to the nowhere-defined bottom map.
SemanticAlgorithm unfold(const SemanticAlgorithm& alg, const std::string& label, int depth,
                         const std::string& io = "");

}  // namespace algoglue
