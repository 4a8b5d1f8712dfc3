#include "algoglue/corpus.hpp"

#include <tuple>

namespace algoglue::corpus {

namespace {

using EdgeSpec = std::tuple<std::string, std::string, std::string>;

ControlGraph graph(const std::vector<std::string>& states, const std::string& initial,
                   const std::string& terminal, const std::vector<EdgeSpec>& edges) {
  ControlGraph g;
  for (const auto& s : states) g.add_state(s);
  g.initial = g.state(initial);
  g.terminal = g.state(terminal);
  for (const auto& [a, b, l] : edges) g.add_edge(a, b, l);
  return g;
}

SemanticAlgorithm semantic(ControlGraph g, StructurePtr s, std::vector<std::string> frame,
                           std::map<std::string, AnchoredOperation> meaning) {
  SemanticAlgorithm a;
  a.syntax = make_syntactic(std::move(g));
  a.structure = std::move(s);
  a.frame = std::move(frame);
  a.meaning = std::move(meaning);
  a.validate();
  return a;
}

const std::vector<std::string> kXY = {"x", "y"};

AnchoredOperation euclid_step(const AbstractDataStructure& n) {
  return pipeline_anchor("euclid_step", {n.anchor("swap", kXY, kXY), n.anchor("mod", {"y", "x"}, {"y"})});
}

SemanticAlgorithm gcd_a_shape(const std::string& step_label) {
  auto n = naturals();
  auto g = graph({"begin", "ifl", "ifr", "end"}, "begin", "end",
                 {{"begin", "ifl", "y=0"}, {"begin", "ifr", "y!=0"}, {"ifl", "end", "return x"},
                  {"ifr", "begin", step_label}});
  return semantic(std::move(g), n, kXY,
                  {{"y=0", n->anchor("read0", {"y"}, {"y"})},
                   {"y!=0", n->anchor("readS", {"y"}, {"y"})},
                   {"return x", n->anchor("id", {"x"}, {"x"})},
                   {step_label, euclid_step(*n)}});
}

}  // namespace

SemanticAlgorithm gcd_A() { return gcd_a_shape("y=x mod y; x=y"); }

SemanticAlgorithm gcd_A_free() { return gcd_a_shape("rem"); }

SemanticAlgorithm gcd_B() {
  auto n = naturals();
  auto g = graph({"begin", "ifl", "ifr", "end", "ge", "lt"}, "begin", "end",
                 {{"begin", "ifl", "y=0"},
                  {"begin", "ifr", "y!=0"},
                  {"ifl", "end", "return x"},
                  {"ifr", "ge", "x>=y"},
                  {"ifr", "lt", "x<y"},
                  {"ge", "ifr", "x=x-y"},
                  {"lt", "begin", "x=y; y=x"}});
  return semantic(std::move(g), n, kXY,
                  {{"y=0", n->anchor("read0", {"y"}, {"y"})},
                   {"y!=0", n->anchor("readS", {"y"}, {"y"})},
                   {"return x", n->anchor("id", {"x"}, {"x"})},
                   {"x>=y", n->anchor("geq", kXY, kXY)},
                   {"x<y", n->anchor("lt", kXY, kXY)},
                   {"x=x-y", n->anchor("sub", kXY, {"x"})},
                   {"x=y; y=x", n->anchor("swap", kXY, kXY)}});
}

SemanticAlgorithm remainder_sub() {
  auto n = naturals();
  auto g = graph({"r0", "r1", "r2", "r3"}, "r0", "r3",
                 {{"r0", "r1", "x>=y"}, {"r1", "r0", "x=x-y"}, {"r0", "r2", "x<y"}, {"r2", "r3", "x=y; y=x"}});
  return semantic(std::move(g), n, kXY,
                  {{"x>=y", n->anchor("geq", kXY, kXY)},
                   {"x<y", n->anchor("lt", kXY, kXY)},
                   {"x=x-y", n->anchor("sub", kXY, {"x"})},
                   {"x=y; y=x", n->anchor("swap", kXY, kXY)}});
}

LogicalAlgorithm gcd_logical() {
  LogicalAlgorithm a;
  a.syntax = gcd_A().syntax;
  a.theory = std::make_shared<Theory>(euclidean_theory());
  a.frame = {"x", "y", "z"};
  a.meaning = {{"y=0", {{"iszero", {"y"}, {"y"}}}},
               {"y!=0", {{"nonzero", {"y"}, {"y"}}}},
               {"return x", {{"id", {"x"}, {"x"}}}},
               {"y=x mod y; x=y", {{"mod", {"x", "y"}, {"z"}}, {"id", {"y"}, {"x"}}, {"id", {"z"}, {"y"}}}}};
  a.validate();
  return a;
}

namespace {

std::string op(const std::string& map, const std::string& v) { return map + "@(" + v + ")->(" + v + ")"; }

Program counter_program(const std::vector<std::string>& states, const std::string& initial,
                        const std::string& terminal, const std::vector<EdgeSpec>& edges) {
  Program p;
  p.model = induced_model_name("naturals", kGcdProgramVars);
  p.graph = graph(states, initial, terminal, edges);
  return p;
}

}  // namespace

ProgramLabelling gcd_programs() {
  ProgramLabelling phi;
  phi.model = induced_model_name("naturals", kGcdProgramVars);
  phi.map["y=0"] = counter_program({"i", "t"}, "i", "t", {{"i", "t", op("read0", "y")}});
  phi.map["y!=0"] = counter_program({"i", "t"}, "i", "t", {{"i", "t", op("readS", "y")}});
  phi.map["return x"] =
      counter_program({"i", "m", "t"}, "i", "t", {{"i", "m", op("succ", "x")}, {"m", "t", op("pred", "x")}});
  // (x, y) := (y, x mod y) for y > 0, with w = 0 on entry and exit. Each
  // round moves y into w while decrementing x; a full round restores y.
  // When x runs out first, y + w is the old y and w the remainder.
  phi.map["y=x mod y; x=y"] = counter_program(
      {"s0", "s1", "s2", "s3", "restore", "s4", "lt", "s5", "s6", "s7", "s8", "t"}, "s0", "t",
      {{"s0", "restore", op("read0", "y")},
       {"s0", "s1", op("readS", "y")},
       {"s1", "lt", op("read0", "x")},
       {"s1", "s2", op("pred", "x")},
       {"s2", "s3", op("pred", "y")},
       {"s3", "s0", op("succ", "w")},
       {"restore", "s0", op("read0", "w")},
       {"restore", "s4", op("pred", "w")},
       {"s4", "restore", op("succ", "y")},
       {"lt", "s5", op("read0", "y")},
       {"lt", "s6", op("pred", "y")},
       {"s6", "lt", op("succ", "x")},
       {"s5", "t", op("read0", "w")},
       {"s5", "s7", op("pred", "w")},
       {"s7", "s8", op("succ", "x")},
       {"s8", "s5", op("succ", "y")}});
  return phi;
}

ModelOfComputation gcd_program_model() {
  auto n = naturals();
  std::vector<AnchoredOperation> anchors;
  for (const auto* m : {"read0", "readS", "succ", "pred"})
    for (const auto& v : kGcdProgramVars) anchors.push_back(n->anchor(m, {v}, {v}));
  return induced_model(*n, kGcdProgramVars, anchors);
}

namespace {

const std::vector<std::string> kSortFrame = {"x", "a", "b", "y"};

std::map<std::string, AnchoredOperation> merge_meanings(const AbstractDataStructure& l) {
  return {{"a!=[], b!=[]", l.anchor("both_nonnil", {"a", "b"}, {"a", "b"})},
          {"fst(a)<=fst(b)", l.anchor("le_fst", {"a", "b"}, {"a", "b"})},
          {"fst(a)>fst(b)", l.anchor("gt_fst", {"a", "b"}, {"a", "b"})},
          {"y=y+[a];queue(a)",
           pipeline_anchor("take_a", {l.anchor("append_head", {"y", "a"}, {"y"}), l.anchor("queue", {"a"}, {"a"})})},
          {"y=y+[b];queue(b)",
           pipeline_anchor("take_b", {l.anchor("append_head", {"y", "b"}, {"y"}), l.anchor("queue", {"b"}, {"b"})})},
          {"return(y+a+b)", pipeline_anchor("finish", {l.anchor("either_nil", {"a", "b"}, {"a", "b"}),
                                                       l.anchor("concat", {"y", "a"}, {"x"}),
                                                       l.anchor("concat", {"x", "b"}, {"x"})})}};
}

const std::vector<EdgeSpec> kMergeEdges = {{"sorted", "nonempty", "a!=[], b!=[]"},
                                           {"nonempty", "combinel", "fst(a)<=fst(b)"},
                                           {"nonempty", "combiner", "fst(a)>fst(b)"},
                                           {"combinel", "sorted", "y=y+[a];queue(a)"},
                                           {"combiner", "sorted", "y=y+[b];queue(b)"},
                                           {"sorted", "end", "return(y+a+b)"}};

std::map<std::string, AnchoredOperation> outer_meanings(const AbstractDataStructure& l) {
  return {{"short(x)", l.anchor("short", {"x"}, {"x"})},
          {"long(x)", l.anchor("long", {"x"}, {"x"})},
          {"a,b=split(x)", pipeline_anchor("split_init", {l.anchor("split", {"x"}, {"a", "b"}),
                                                          l.anchor("nil", {}, {"y"})})},
          {"return(x)", l.anchor("id", {"x"}, {"x"})}};
}

StructurePtr or_default(StructurePtr lists) { return lists ? lists : lists_of_naturals(); }

}  // namespace

SemanticAlgorithm mergesort(SortOrder order, StructurePtr lists) {
  lists = or_default(lists);
  const auto& l = *lists;
  std::vector<std::string> states = {"init", "left", "right", "split", "sorted", "nonempty",
                                     "combinel", "combiner", "end"};
  std::vector<EdgeSpec> edges = {{"init", "left", "short(x)"}, {"init", "right", "long(x)"},
                                 {"right", "split", "a,b=split(x)"}};
  auto meaning = outer_meanings(l);
  meaning.merge(merge_meanings(l));
  if (order == SortOrder::Free) {
    edges.emplace_back("split", "sorted", kSortBoth);
    meaning.emplace(kSortBoth, pipeline_anchor("sort_both", {l.anchor("sort", {"a"}, {"a"}),
                                                             l.anchor("sort", {"b"}, {"b"})}));
  } else {
    states.push_back("half");
    auto first = order == SortOrder::AB ? "a" : "b";
    auto second = order == SortOrder::AB ? "b" : "a";
    edges.emplace_back("split", "half", std::string("sort(") + first + ")");
    edges.emplace_back("half", "sorted", std::string("sort(") + second + ")");
    meaning.emplace("sort(a)", l.anchor("sort", {"a"}, {"a"}));
    meaning.emplace("sort(b)", l.anchor("sort", {"b"}, {"b"}));
  }
  edges.insert(edges.end(), kMergeEdges.begin(), kMergeEdges.end());
  edges.emplace_back("left", "end", "return(x)");
  return semantic(graph(states, "init", "end", edges), lists, kSortFrame, std::move(meaning));
}

SemanticAlgorithm merge_algorithm(StructurePtr lists) {
  lists = or_default(lists);
  return semantic(graph({"sorted", "nonempty", "combinel", "combiner", "end"}, "sorted", "end", kMergeEdges),
                  lists, kSortFrame, merge_meanings(*lists));
}

SemanticAlgorithm mergesort_outer(StructurePtr lists, std::size_t budget) {
  lists = or_default(lists);
  const auto& l = *lists;
  auto meaning = outer_meanings(l);
  meaning.emplace(kSortBoth, pipeline_anchor("sort_both", {l.anchor("sort", {"a"}, {"a"}),
                                                           l.anchor("sort", {"b"}, {"b"})}));
  auto merge_map = algorithm_map("merge", merge_algorithm(lists), {"a", "b", "y"}, {"x"}, budget);
  meaning.emplace("merge", AnchoredOperation(std::move(merge_map), {"a", "b", "y"}, {"x"}));
  auto g = graph({"init", "left", "right", "split", "sorted", "end"}, "init", "end",
                 {{"init", "left", "short(x)"},
                  {"init", "right", "long(x)"},
                  {"right", "split", "a,b=split(x)"},
                  {"split", "sorted", kSortBoth},
                  {"sorted", "end", "merge"},
                  {"left", "end", "return(x)"}});
  return semantic(std::move(g), lists, kSortFrame, std::move(meaning));
}

SemanticAlgorithm sort_chain(SortOrder order, StructurePtr lists) {
  lists = or_default(lists);
  auto first = order == SortOrder::BA ? "b" : "a";
  auto second = order == SortOrder::BA ? "a" : "b";
  auto g = graph({"i", "m", "t"}, "i", "t",
                 {{"i", "m", std::string("sort(") + first + ")"}, {"m", "t", std::string("sort(") + second + ")"}});
  return semantic(std::move(g), lists, {"a", "b"},
                  {{"sort(a)", lists->anchor("sort", {"a"}, {"a"})},
                   {"sort(b)", lists->anchor("sort", {"b"}, {"b"})}});
}

StructuralMap mergesort_map(int depth, std::size_t budget) {
  auto alg = unfold(mergesort(SortOrder::AB), "sort", depth);
  return algorithm_map("sort", alg, {"x"}, {"x"}, budget);
}

}  // namespace algoglue::corpus
