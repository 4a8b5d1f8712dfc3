#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algoglue/model.hpp"
#include "algoglue/value.hpp"

namespace algoglue {

using Tuple = std::vector<Value>;
using Rng = std::mt19937_64;

/// Carrier of an abstract data structure. Equality is Value equality.
struct DataDomain {
  std::string name;
  /// Draws one element; `size` bounds it in a domain-specific way
  /// (largest natural, longest list, highest polynomial degree).
  std::function<Value(Rng&, std::uint64_t size)> sample;
  std::uint64_t default_size = 10;
  /// i-th element of a canonical enumeration; unset for domains we only sample.
  std::function<std::optional<Value>(std::size_t)> nth;
  std::optional<std::size_t> cardinality;
  std::function<std::string(const Value&)> render;
  std::function<Value(std::string_view)> parse;
  Value default_value;
};

/// First `limit` k-tuples of an enumerable domain: the full product in
/// lexicographic order for finite domains, otherwise by increasing maximum
/// index. Returns std::nullopt when the domain has no enumeration.
std::optional<std::vector<Tuple>> enumerate_tuples(const DataDomain& d, std::size_t k,
                                                   std::size_t limit);

struct Composite;

/// A named partial map D^dom -> D^im.
struct StructuralMap {
  std::string name;
  std::size_t dom = 0;
  std::size_t im = 0;
  std::function<std::optional<Tuple>(std::span<const Value>)> fn;
  /// Partial identity (a test).
  bool guard = false;
  /// Set when the map was built by compose_maps.
  std::shared_ptr<const Composite> composite;

  /// Throws ArityMismatch when the argument or result length is wrong.
  std::optional<Tuple> apply(std::span<const Value> args) const;
};

/// A structural map acting on an environment: reads `inputs`, writes
/// `outputs`, leaves every other variable unchanged.
struct AnchoredOperation {
  StructuralMap map;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  AnchoredOperation() = default;
  AnchoredOperation(StructuralMap m, std::vector<std::string> in, std::vector<std::string> out);

  /// `map@(in,...)->(out,...)`
  std::string name() const;
  std::optional<Environment> apply(const Environment& env) const;
  /// The first primitive stage, looking through composites, anchored at this
  /// operation's variables. Empty when that stage reads composite scratch.
  std::optional<AnchoredOperation> leading() const;
  AnchoredOperation renamed(const std::function<std::string(const std::string&)>& rename) const;
};

struct Composite {
  std::vector<std::string> frame;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<AnchoredOperation> pipeline;
};

struct AnchorName {
  std::string map;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};
AnchorName parse_anchor_name(std::string_view text);

class AbstractDataStructure {
 public:
  AbstractDataStructure(std::string name, DataDomain domain);

  void add(StructuralMap m);
  void declare_disjoint(std::string a, std::string b);

  const std::string& name() const { return name_; }
  const DataDomain& domain() const { return domain_; }
  const std::vector<StructuralMap>& maps() const { return maps_; }
  const std::vector<std::pair<std::string, std::string>>& disjoint_pairs() const { return disjoint_; }
  const StructuralMap* find(std::string_view name) const;
  const StructuralMap& map(std::string_view name) const;  // throws UnknownName
  bool disjoint(std::string_view a, std::string_view b) const;

  AnchoredOperation anchor(std::string_view map, std::vector<std::string> in,
                           std::vector<std::string> out) const;

 private:
  std::string name_;
  DataDomain domain_;
  std::vector<StructuralMap> maps_;
  std::vector<std::pair<std::string, std::string>> disjoint_;
};

using StructurePtr = std::shared_ptr<const AbstractDataStructure>;

std::size_t maximal_arity(const AbstractDataStructure& d);

/// Carrier D x D'. Each map s of `left` becomes `left.s`, acting on the first
/// components of its argument pairs; second components pass through in
/// position (the last one is repeated when im > dom; undefined when dom = 0 < im).
/// Symmetrically for `right.s'`.
StructurePtr product(const AbstractDataStructure& left, const AbstractDataStructure& right);

/// Sequential composition of anchored operations over a local variable frame.
/// The derived map takes `inputs` positionally and returns `outputs`.
/// Throws FrameMismatch when a stage touches a variable outside `frame` or
/// reads a non-input variable before any stage wrote it.
StructuralMap compose_maps(std::string name, std::vector<std::string> frame,
                           std::vector<std::string> inputs, std::vector<std::string> outputs,
                           std::vector<AnchoredOperation> pipeline);
/// inputs = outputs = frame.
StructuralMap compose_maps(std::string name, std::vector<std::string> frame,
                           std::vector<AnchoredOperation> pipeline);

StructuralMap identity_map(std::size_t arity);
/// Nowhere-defined 0 -> 0 map named "bottom".
StructuralMap bottom_map();

StructurePtr booleans();
/// read0, readS, succ, pred, add, mult, sub, mod, div, geq, lt, swap, id,
/// const_0, const_1.
StructurePtr naturals();
/// Plain naturals of the textbook example: read0, readS, succ.
StructurePtr naturals_basic();
StructurePtr lists_of_naturals();
/// GF(2)[x] with polynomials stored as bitmasks (bit i = coefficient of x^i).
StructurePtr gf2_polynomials();

namespace gf2 {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, bool* overflow = nullptr);
std::uint64_t divmod(std::uint64_t a, std::uint64_t b, std::uint64_t* rem);
int degree(std::uint64_t p);
std::string render(std::uint64_t p);
std::uint64_t parse(std::string_view text);
}  // namespace gf2

/// The model whose configurations are environments over `vars` and whose
/// instructions are the given anchored operations, named by
/// AnchoredOperation::name(). Model name: `structure[v1,v2,...]`.
ModelOfComputation induced_model(const AbstractDataStructure& structure,
                                 const std::vector<std::string>& vars,
                                 const std::vector<AnchoredOperation>& anchors);

std::string induced_model_name(std::string_view structure, const std::vector<std::string>& vars);

}  // namespace algoglue
