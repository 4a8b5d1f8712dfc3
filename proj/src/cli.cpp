#include "algoglue/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algoglue/corpus.hpp"
#include "algoglue/error.hpp"
#include "algoglue/io.hpp"
#include "algoglue/recfun.hpp"
#include "algoglue/succinct.hpp"

namespace algoglue {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNegative = 2, kBudget = 3 };

struct Globals {
  std::uint64_t seed = 1;
  std::size_t budget = 100000;
  std::size_t samples = 50;
  bool json = false;
};

struct Context {
  Globals g;
  Workspace ws;
  std::ostream& out;
  std::ostream& err;
};

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Terminated: return kOk;
    case Outcome::Stuck: return kNegative;
    case Outcome::OutOfBudget: return kBudget;
  }
  return kUsage;
}

void emit(Context& cx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    cx.out << text;
  else
    write_text_file(path, text);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& part : split_top_level(s, ','))
    if (auto t = trim(part); !t.empty()) out.push_back(t);
  return out;
}

// Variables of an induced model "structure[v1,...]" that the literal leaves
// out start at the domain's default value.
Environment complete(const Workspace& ws, const std::string& model, Environment env) {
  auto open = model.find('[');
  auto s = ws.structure(model.substr(0, open));
  for (const auto& v : split_list(model.substr(open + 1, model.size() - open - 2)))
    if (!env.has(v)) env.set(v, s->domain().default_value);
  return env;
}

ControlGraph visited_subgraph(const ControlGraph& g, const Trace& t) {
  std::set<int> states{g.initial, g.terminal};
  for (const auto& s : t.states) states.insert(s.control);
  std::set<std::size_t> edges(t.edges.begin(), t.edges.end());
  ControlGraph sub;
  std::map<int, int> index;
  for (int s : states) index[s] = sub.add_state(g.states[static_cast<std::size_t>(s)]);
  sub.initial = index.at(g.initial);
  sub.terminal = index.at(g.terminal);
  for (auto e : edges) sub.add_edge(index.at(g.edges[e].from), index.at(g.edges[e].to), g.edges[e].label);
  return sub;
}

int report_trace(Context& cx, const ControlGraph& g, const Trace& t, bool full, const std::string& dot) {
  const auto& last = t.last();
  if (cx.g.json) {
    json j{{"outcome", to_string(t.outcome)},
           {"steps", t.steps()},
           {"final", config_str(last.configuration)},
           {"control", g.states[static_cast<std::size_t>(last.control)]}};
    if (full) {
      json states = json::array();
      for (const auto& s : t.states)
        states.push_back(json{{"control", g.states[static_cast<std::size_t>(s.control)]},
                              {"configuration", config_str(s.configuration)}});
      j["trace"] = std::move(states);
    }
    cx.out << j.dump(2) << "\n";
  } else {
    if (full) {
      for (std::size_t i = 0; i < t.states.size(); ++i) {
        cx.out << i << "  " << g.states[static_cast<std::size_t>(t.states[i].control)] << "  "
               << config_str(t.states[i].configuration) << "\n";
        if (i < t.edges.size()) cx.out << "   -- " << g.edges[t.edges[i]].label << "\n";
      }
    }
    cx.out << "outcome: " << to_string(t.outcome) << "\n"
           << "steps: " << t.steps() << "\n"
           << "final: " << config_str(last.configuration) << "\n"
           << "control: " << g.states[static_cast<std::size_t>(last.control)] << "\n";
  }
  if (!dot.empty()) write_text_file(dot, to_dot(visited_subgraph(g, t), "visited"));
  return outcome_code(t.outcome);
}

// ---------------------------------------------------------------------------

struct RunOpts {
  std::string program, algorithm, input, dot;
  bool trace = false;
};

int cmd_run(Context& cx, const RunOpts& o) {
  if (o.program.empty() == o.algorithm.empty()) throw CLI::ValidationError("run: give exactly one of --program, --algorithm");
  if (!o.program.empty()) {
    auto p = cx.ws.program(o.program);
    auto model = cx.ws.model_for(p);
    p.validate(model);
    Config x0 = p.model == "tm" ? Config(parse_tape(o.input))
                                : Config(complete(cx.ws, p.model, parse_environment(o.input)));
    return report_trace(cx, p.graph, run(model, p, x0, cx.g.budget), o.trace, o.dot);
  }
  auto a = cx.ws.semantic(cx.ws.algorithm(o.algorithm));
  auto t = abstract_run(a, parse_environment(o.input), cx.g.budget);
  return report_trace(cx, a.syntax.graph, t, o.trace, o.dot);
}

// ---------------------------------------------------------------------------

int demo_booleans(Context& cx) {
  auto b = booleans();
  const auto& builtins = builtin_tm_programs();
  ImplementationMap impl{delta_bool(), {}};
  std::vector<std::string> covered = {"not", "read0", "read1", "and"};
  for (const auto& m : covered) impl.programs.emplace(m, builtins.at("tm_" + m).program);
  auto report = verify_implementation(tm_model(), *b, impl, covered, 16, cx.g.budget, cx.g.seed);
  cx.out << "booleans on tapes (delta_bool), budget " << cx.g.budget << "\n";
  for (const auto& m : report.maps) {
    cx.out << "  " << m.map << "  " << (m.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& c : m.checks) {
      cx.out << "    ";
      for (std::size_t i = 0; i < c.input.size(); ++i) cx.out << (i ? "," : "") << c.input[i].str();
      cx.out << " -> ";
      if (c.expected) {
        for (std::size_t i = 0; i < c.expected->size(); ++i) cx.out << (i ? "," : "") << (*c.expected)[i].str();
      } else {
        cx.out << "undefined";
      }
      cx.out << "  [" << to_string(c.trace.outcome) << " " << config_str(c.trace.last().configuration) << " in "
             << c.trace.steps() << " steps]\n";
    }
  }
  for (const auto& w : report.warnings) cx.out << "  warning: " << w << "\n";
  cx.out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return report.pass() ? kOk : kNegative;
}

int demo_gcd(Context& cx) {
  bool ok = true;
  auto a = corpus::gcd_A();
  auto input = parse_environment("{x: 12, y: 8}");
  auto t = abstract_run(a, input, cx.g.budget);
  auto x = std::get<Environment>(t.last().configuration).get("x");
  cx.out << "gcd_A abstract run on " << input.str() << ": " << to_string(t.outcome) << ", x = " << x.str() << " ("
         << t.steps() << " steps)\n";
  ok &= t.outcome == Outcome::Terminated && x == Value::nat(4);

  auto phi = corpus::gcd_programs();
  auto glued = glue(a.syntax, phi).program;
  auto model = corpus::gcd_program_model();
  auto tp = run(model, glued, parse_environment("{x: 12, y: 8, w: 0}"), cx.g.budget);
  auto xp = std::get<Environment>(tp.last().configuration).get("x");
  cx.out << "glued program (" << glued.graph.states.size() << " states, " << glued.graph.edges.size()
         << " edges) over " << model.name() << ": " << to_string(tp.outcome) << ", x = " << xp.str() << " ("
         << tp.steps() << " steps)\n";
  ok &= tp.outcome == Outcome::Terminated && xp == Value::nat(4);
  auto det = check_local_determinism(model, glued);
  cx.out << "glued program locally deterministic: " << (det.clean() ? "yes" : "no") << "\n";

  auto b = corpus::gcd_B();
  auto free = corpus::gcd_A_free();
  auto gb = glue_alg(free.syntax, cx.ws.algorithm_labelling("builtin:gcd_remainder"));
  bool iso = graph_isomorphic(gb.graph, b.syntax.graph).has_value();
  cx.out << "gcd_B is gcd_A[rem <- remainder_sub]: " << (iso ? "yes" : "no") << "\n";
  ok &= iso;
  auto tb = abstract_run(b, input, cx.g.budget);
  auto xb = std::get<Environment>(tb.last().configuration).get("x");
  cx.out << "gcd_B abstract run on " << input.str() << ": " << to_string(tb.outcome) << ", x = " << xb.str() << "\n";
  ok &= xb == Value::nat(4);

  Library lib;
  for (const auto& [l, p] : phi.map) lib.emplace_back(l, p);
  auto found = find_succinct(glued, lib, SizeFunction::parse("n/2"), cx.g.budget);
  if (found.witness) {
    const auto& w = *found.witness;
    bool same = graph_isomorphic(w.algorithm.graph, a.syntax.graph).has_value();
    cx.out << "succinct decomposition: size " << size(w.algorithm) << " <= f(" << w.verdict.size_program
           << ") = " << w.verdict.bound << ", isomorphic to gcd_A: " << (same ? "yes" : "no") << " (" << found.nodes
           << " nodes)\n";
  } else {
    cx.out << "succinct decomposition: none found\n";
    ok = false;
  }
  return ok ? kOk : kNegative;
}

int demo_mergesort(Context& cx) {
  const std::vector<std::uint64_t> items = {5, 2, 7, 1, 8, 3, 6, 4};
  const int depth = static_cast<int>(std::ceil(std::log2(items.size()))) + 1;
  auto expected = items;
  std::sort(expected.begin(), expected.end());
  Environment env;
  env.set("x", Value::list(items));
  bool ok = true;
  cx.out << "input " << Value::list(items).str() << ", unfolding depth " << depth << "\n";
  for (auto [name, order] : {std::pair{"sort(a) then sort(b)", corpus::SortOrder::AB},
                             std::pair{"sort(b) then sort(a)", corpus::SortOrder::BA}}) {
    auto u = unfold(corpus::mergesort(order), "sort", depth);
    auto t = abstract_run(u, env, cx.g.budget);
    auto x = std::get<Environment>(t.last().configuration).get("x");
    cx.out << "  " << name << ": " << u.syntax.graph.states.size() << " states, " << to_string(t.outcome) << ", "
           << x.str() << "\n";
    ok &= t.outcome == Outcome::Terminated && x.as_list() == expected;
  }
  auto lists = replace_map(*lists_of_naturals(), corpus::mergesort_map(depth - 1, cx.g.budget));
  auto free = corpus::mergesort(corpus::SortOrder::Free, lists);
  auto t = abstract_run(free, env, cx.g.budget);
  auto x = std::get<Environment>(t.last().configuration).get("x");
  cx.out << "  order-free label: " << to_string(t.outcome) << ", " << x.str() << "\n";
  ok &= t.outcome == Outcome::Terminated && x.as_list() == expected;
  cx.out << "verdict: " << (ok ? "sorted" : "NOT sorted") << "\n";
  return ok ? kOk : kNegative;
}

struct CensusOpts {
  std::size_t n = 6;
  std::string f = "n/2";
  std::string instructions = "write_1,right";
  std::string out;
};

int cmd_census(Context& cx, const CensusOpts& o) {
  auto f = SizeFunction::parse(o.f);
  auto instr = split_list(o.instructions);
  for (const auto& i : instr)
    if (!tm_model().has(i)) throw Error(Errc::UnknownInstruction, i);
  auto r = census(o.n, f, "tm", instr, cx.g.budget, chain_library("tm", instr));
  if (cx.g.json) {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back(json{{"n", row.n}, {"programs", row.programs}, {"succinct", row.succinct},
                          {"fraction", row.fraction()}});
    emit(cx, o.out, json{{"rows", rows}, {"truncated", r.truncated}}.dump(2) + "\n");
  } else {
    emit(cx, o.out, r.csv());
  }
  if (r.truncated) cx.err << "census: search budget exhausted for some programs\n";
  return r.truncated ? kBudget : kOk;
}

int cmd_demo(Context& cx, const std::string& name) {
  if (name == "booleans") return demo_booleans(cx);
  if (name == "gcd") return demo_gcd(cx);
  if (name == "mergesort") return demo_mergesort(cx);
  if (name == "census") {
    cx.out << "programs over {write_1, right} by size, f(n) = n/2\n";
    return cmd_census(cx, CensusOpts{});
  }
  throw CLI::ValidationError("demo: unknown demo '" + name + "'");
}

// ---------------------------------------------------------------------------

struct GlueOpts {
  std::string algorithm, labelling, out;
};

bool is_program_labelling(const std::string& ref, const Workspace& ws) {
  try {
    ws.program_labelling(ref);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::SpecificationMismatch) return false;
    throw;
  }
}

int cmd_glue(Context& cx, const GlueOpts& o) {
  auto a = cx.ws.algorithm(o.algorithm);
  if (is_program_labelling(o.labelling, cx.ws)) {
    auto r = glue(a.syntax, cx.ws.program_labelling(o.labelling));
    emit(cx, o.out, write_program(r.program));
    if (!o.out.empty())
      cx.err << "glued program: " << r.program.graph.states.size() << " states, " << r.program.graph.edges.size()
             << " edges\n";
    return kOk;
  }
  auto glued = glue_alg(a.syntax, cx.ws.algorithm_labelling(o.labelling));
  emit(cx, o.out, write_algorithm(document(glued)));
  return kOk;
}

struct ImplOpts {
  std::string program, algorithm, labelling, f = "n/2";
};

int cmd_check_implements(Context& cx, const ImplOpts& o) {
  auto p = cx.ws.program(o.program);
  auto a = cx.ws.algorithm(o.algorithm);
  auto v = check_implements(p, a.syntax, cx.ws.program_labelling(o.labelling));
  if (cx.g.json) {
    json j{{"implements", v.implements}, {"reason", v.reason}};
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "implements: " << (v.implements ? "yes" : "no") << "\n";
    if (!v.reason.empty()) cx.out << "reason: " << v.reason << "\n";
  }
  return v.implements ? kOk : kNegative;
}

struct VerifyOpts {
  std::string manifest, maps;
};

int cmd_verify_impl(Context& cx, const VerifyOpts& o) {
  std::string sname;
  auto impl = cx.ws.manifest(o.manifest, &sname);
  auto s = cx.ws.structure(sname);
  if (impl.programs.empty()) throw Error(Errc::MissingProgram, "manifest lists no programs");
  auto model = cx.ws.model_for(impl.programs.begin()->second);
  std::vector<std::string> covered = o.maps.empty() ? std::vector<std::string>{} : split_list(o.maps);
  if (covered.empty())
    for (const auto& [m, p] : impl.programs) covered.push_back(m);
  auto report = verify_implementation(model, *s, impl, covered, cx.g.samples, cx.g.budget, cx.g.seed);
  if (cx.g.json) {
    json maps = json::array();
    for (const auto& m : report.maps) {
      json j{{"map", m.map}, {"pass", m.pass}, {"inputs", m.checks.size()}};
      if (m.witness) {
        json input = json::array();
        for (const auto& v : m.witness->input) input.push_back(s->domain().render(v));
        j["counterexample"] = input;
      }
      maps.push_back(std::move(j));
    }
    cx.out << json{{"pass", report.pass()}, {"maps", maps}, {"warnings", report.warnings}}.dump(2) << "\n";
  } else {
    cx.out << report.str(s->domain());
  }
  return report.pass() ? kOk : kNegative;
}

struct ModelOpts {
  std::string structure, theory = "builtin:euclidean", binding = "builtin:euclidean";
};

int cmd_check_model(Context& cx, const ModelOpts& o) {
  auto s = cx.ws.structure(o.structure);
  auto t = cx.ws.theory(o.theory);
  auto r = check_model(*s, *t, cx.ws.binding(o.binding), cx.g.samples, cx.g.seed);
  if (cx.g.json) {
    json sentences = json::array();
    for (const auto& sr : r.sentences) {
      json j{{"index", sr.index}, {"sentence", sr.text}, {"checked", sr.checked}};
      if (sr.counterexample) j["counterexample"] = sr.counterexample->str();
      sentences.push_back(std::move(j));
    }
    cx.out << json{{"ok", r.ok()}, {"sentences", sentences}}.dump(2) << "\n";
  } else {
    cx.out << r.str();
  }
  return r.ok() ? kOk : kNegative;
}

struct InstantiateOpts {
  std::string algorithm, structure, binding = "builtin:euclidean", out;
};

int cmd_instantiate(Context& cx, const InstantiateOpts& o) {
  auto doc = cx.ws.algorithm(o.algorithm);
  fs::path base = fs::exists(o.algorithm) ? fs::path(o.algorithm).parent_path() : fs::path();
  auto logical = cx.ws.logical(doc, base);
  try {
    auto sem = instantiate(logical, cx.ws.structure(o.structure), cx.ws.binding(o.binding), cx.g.samples,
                           cx.g.seed);
    emit(cx, o.out, write_algorithm(document(sem)));
    return kOk;
  } catch (const ModelCheckFailure& f) {
    cx.err << f.report().str();
    return kNegative;
  }
}

struct UnfoldOpts {
  std::string algorithm, label, io, out;
  int depth = 1;
};

int cmd_unfold(Context& cx, const UnfoldOpts& o) {
  auto doc = cx.ws.algorithm(o.algorithm);
  if (o.depth < 0) throw CLI::ValidationError("unfold: --depth must be >= 0");
  if (doc.semantic()) {
    auto u = unfold(cx.ws.semantic(doc), o.label, o.depth, o.io);
    emit(cx, o.out, write_algorithm(document(u)));
  } else {
    emit(cx, o.out, write_algorithm(document(unfold(doc.syntax, o.label, o.depth))));
  }
  return kOk;
}

struct DotOpts {
  std::string program, algorithm, out;
};

int cmd_dot(Context& cx, const DotOpts& o) {
  if (o.program.empty() == o.algorithm.empty()) throw CLI::ValidationError("dot: give exactly one of --program, --algorithm");
  if (!o.program.empty())
    emit(cx, o.out, to_dot(cx.ws.program(o.program).graph, "P"));
  else
    emit(cx, o.out, to_dot(cx.ws.algorithm(o.algorithm).syntax.graph, "A"));
  return kOk;
}

int cmd_succinct_check(Context& cx, const ImplOpts& o) {
  auto p = cx.ws.program(o.program);
  auto a = cx.ws.algorithm(o.algorithm);
  auto f = SizeFunction::parse(o.f);
  auto v = is_f_succinct(p, a.syntax, cx.ws.program_labelling(o.labelling), f);
  if (cx.g.json) {
    cx.out << json{{"implements", v.implements},
                   {"size_program", v.size_program},
                   {"size_algorithm", v.size_algorithm},
                   {"bound", v.bound},
                   {"succinct", v.succinct()}}
                  .dump(2)
           << "\n";
  } else {
    cx.out << "implements: " << (v.implements ? "yes" : "no") << "\n"
           << "size(P) = " << v.size_program << ", size(A) = " << v.size_algorithm << ", f(size(P)) = " << v.bound
           << "\n"
           << "succinct: " << (v.succinct() ? "yes" : "no") << "\n";
  }
  return v.succinct() ? kOk : kNegative;
}

struct FindOpts {
  std::string program, library, f = "n/2", out;
};

int cmd_succinct_find(Context& cx, const FindOpts& o) {
  auto p = cx.ws.program(o.program);
  Library lib;
  if (is_program_labelling(o.library, cx.ws)) {
    for (auto& [l, q] : cx.ws.program_labelling(o.library).map) lib.emplace_back(l, std::move(q));
  } else {
    throw CLI::ValidationError("succinct-find: --library must be a program labelling");
  }
  auto r = find_succinct(p, lib, SizeFunction::parse(o.f), cx.g.budget);
  if (!r.witness) {
    cx.out << (r.budget_exhausted ? "search budget exhausted" : "no succinct algorithm") << " after " << r.nodes
           << " nodes\n";
    return r.budget_exhausted ? kBudget : kNegative;
  }
  const auto& w = *r.witness;
  cx.out << "found algorithm of size " << size(w.algorithm) << " <= f(" << w.verdict.size_program
         << ") = " << w.verdict.bound << " after " << r.nodes << " nodes\n";
  for (const auto& e : w.algorithm.graph.edges)
    cx.out << "  " << w.algorithm.graph.states[static_cast<std::size_t>(e.from)] << " -"
           << e.label << "-> " << w.algorithm.graph.states[static_cast<std::size_t>(e.to)] << "\n";
  if (!o.out.empty()) write_text_file(o.out, write_algorithm(document(w.algorithm)));
  return kOk;
}

struct RecFunOpts {
  std::string term, args;
};

int cmd_eval_recfun(Context& cx, const RecFunOpts& o) {
  RecFunTerm t = o.term == "add"    ? addition_term()
                 : o.term == "mult" ? multiplication_term()
                                    : parse_recfun(o.term);
  std::vector<std::uint64_t> args;
  for (const auto& a : split_list(o.args)) args.push_back(parse_value(a).as_nat());
  if (args.size() != t.arity())
    throw Error(Errc::ArityMismatch, "term takes " + std::to_string(t.arity()) + " argument(s), got " +
                                         std::to_string(args.size()));
  auto r = eval_recfun(t, args, cx.g.budget);
  switch (r.status) {
    case RecFunResult::Status::Value: cx.out << r.value << "\n"; return kOk;
    case RecFunResult::Status::Undefined: cx.out << "undefined\n"; return kNegative;
    case RecFunResult::Status::OutOfBudget: cx.out << "out of budget\n"; return kBudget;
  }
  return kUsage;
}

int cmd_list(Context& cx) {
  cx.out << "structures:";
  for (const auto& s : cx.ws.builtin_structures()) cx.out << " " << s;
  cx.out << "\ninterpretations: delta_bool delta_nat_unary delta_nat_binary\nprograms:";
  for (const auto& s : cx.ws.builtin_programs()) cx.out << " " << s;
  cx.out << "\nalgorithms:";
  for (const auto& s : cx.ws.builtin_algorithms()) cx.out << " " << s;
  cx.out << "\nlabellings: gcd_programs gcd_remainder sort_ab\ntheories: euclidean\nbindings: euclidean\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context cx{Globals{}, Workspace{}, out, err};
  CLI::App app{"Programs, algorithms and glueings over models of computation", "algoglue"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cx.g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--budget", cx.g.budget, "Step budget")->capture_default_str();
  app.add_option("--samples", cx.g.samples, "Inputs per sampled check")->capture_default_str();
  app.add_flag("--json", cx.g.json, "Machine-readable output");

  RunOpts run_o;
  auto* run_c = app.add_subcommand("run", "Run a program or an algorithm on one input");
  run_c->add_option("--program", run_o.program, "Program file or built-in name");
  run_c->add_option("--algorithm", run_o.algorithm, "Semantic algorithm (abstract run)");
  run_c->add_option("--input", run_o.input, "Tape literal or environment literal")->required();
  run_c->add_option("--dot", run_o.dot, "Write the visited subgraph as DOT");
  run_c->add_flag("--trace", run_o.trace, "Print every machine state");

  std::string demo_name;
  auto* demo_c = app.add_subcommand("demo", "End-to-end showcase");
  demo_c->add_option("name", demo_name, "booleans | gcd | mergesort | census")->required();

  GlueOpts glue_o;
  auto* glue_c = app.add_subcommand("glue", "Glue an algorithm along a labelling");
  glue_c->add_option("--algorithm", glue_o.algorithm)->required();
  glue_c->add_option("--labelling", glue_o.labelling)->required();
  glue_c->add_option("--out", glue_o.out);

  ImplOpts impl_o;
  auto* impl_c = app.add_subcommand("check-implements", "Is the program a glueing of the algorithm?");
  impl_c->add_option("--program", impl_o.program)->required();
  impl_c->add_option("--algorithm", impl_o.algorithm)->required();
  impl_c->add_option("--labelling", impl_o.labelling)->required();

  VerifyOpts verify_o;
  auto* verify_c = app.add_subcommand("verify-impl", "Check an implementation manifest");
  verify_c->add_option("--manifest", verify_o.manifest)->required();
  verify_c->add_option("--maps", verify_o.maps, "Comma-separated maps to check (default: all listed)");

  ModelOpts model_o;
  auto* model_c = app.add_subcommand("check-model", "Check a theory on a structure");
  model_c->add_option("--structure", model_o.structure)->required();
  model_c->add_option("--theory", model_o.theory)->capture_default_str();
  model_c->add_option("--binding", model_o.binding)->capture_default_str();

  InstantiateOpts inst_o;
  auto* inst_c = app.add_subcommand("instantiate", "Instantiate a logical algorithm over a structure");
  inst_c->add_option("--algorithm", inst_o.algorithm)->required();
  inst_c->add_option("--structure", inst_o.structure)->required();
  inst_c->add_option("--binding", inst_o.binding)->capture_default_str();
  inst_c->add_option("--out", inst_o.out);

  UnfoldOpts unfold_o;
  auto* unfold_c = app.add_subcommand("unfold", "Unfold a recursive label");
  unfold_c->add_option("--algorithm", unfold_o.algorithm)->required();
  unfold_c->add_option("--label", unfold_o.label)->required();
  unfold_c->add_option("--depth", unfold_o.depth)->capture_default_str();
  unfold_c->add_option("--io", unfold_o.io, "Variable the recursive call reads and writes");
  unfold_c->add_option("--out", unfold_o.out);

  DotOpts dot_o;
  auto* dot_c = app.add_subcommand("dot", "Emit a control graph as DOT");
  dot_c->add_option("--program", dot_o.program);
  dot_c->add_option("--algorithm", dot_o.algorithm);
  dot_c->add_option("--out", dot_o.out);

  ImplOpts sc_o;
  auto* sc_c = app.add_subcommand("succinct-check", "Check f-succinctness of a given decomposition");
  sc_c->add_option("--program", sc_o.program)->required();
  sc_c->add_option("--algorithm", sc_o.algorithm)->required();
  sc_c->add_option("--labelling", sc_o.labelling)->required();
  sc_c->add_option("--f", sc_o.f)->capture_default_str();

  FindOpts sf_o;
  auto* sf_c = app.add_subcommand("succinct-find", "Search for an f-succinct algorithm");
  sf_c->add_option("--program", sf_o.program)->required();
  sf_c->add_option("--library", sf_o.library, "Program labelling whose programs form the library")->required();
  sf_c->add_option("--f", sf_o.f)->capture_default_str();
  sf_c->add_option("--out", sf_o.out);

  CensusOpts census_o;
  auto* census_c = app.add_subcommand("census", "Count f-succinct programs by size");
  census_c->add_option("--n", census_o.n)->capture_default_str();
  census_c->add_option("--f", census_o.f)->capture_default_str();
  census_c->add_option("--instructions", census_o.instructions)->capture_default_str();
  census_c->add_option("--out", census_o.out, "CSV file (default: stdout)");

  RecFunOpts rf_o;
  auto* rf_c = app.add_subcommand("eval-recfun", "Evaluate a recursive function term");
  rf_c->add_option("--term", rf_o.term, "S-expression, or add / mult")->required();
  rf_c->add_option("--args", rf_o.args, "Comma-separated naturals");

  auto* list_c = app.add_subcommand("list", "List built-in objects");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run_c->parsed()) return cmd_run(cx, run_o);
    if (demo_c->parsed()) return cmd_demo(cx, demo_name);
    if (glue_c->parsed()) return cmd_glue(cx, glue_o);
    if (impl_c->parsed()) return cmd_check_implements(cx, impl_o);
    if (verify_c->parsed()) return cmd_verify_impl(cx, verify_o);
    if (model_c->parsed()) return cmd_check_model(cx, model_o);
    if (inst_c->parsed()) return cmd_instantiate(cx, inst_o);
    if (unfold_c->parsed()) return cmd_unfold(cx, unfold_o);
    if (dot_c->parsed()) return cmd_dot(cx, dot_o);
    if (sc_c->parsed()) return cmd_succinct_check(cx, sc_o);
    if (sf_c->parsed()) return cmd_succinct_find(cx, sf_o);
    if (census_c->parsed()) return cmd_census(cx, census_o);
    if (rf_c->parsed()) return cmd_eval_recfun(cx, rf_o);
    if (list_c->parsed()) return cmd_list(cx);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace algoglue
