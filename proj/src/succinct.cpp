#include "algoglue/succinct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace algoglue {

std::size_t size(const ControlGraph& g) { return g.states.size() + g.edges.size(); }
std::size_t size(const Program& p) { return size(p.graph); }
std::size_t size(const SyntacticAlgorithm& a) { return size(a.graph); }

// ---------------------------------------------------------------------------
// Size functions

SizeFunction::SizeFunction(std::string name, std::function<std::uint64_t(std::uint64_t)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

namespace {

struct Expr {
  enum class Op { Num, N, Add, Sub, Mul, Div, Sqrt, Log2 };
  Op op = Op::Num;
  std::int64_t value = 0;
  std::vector<Expr> args;

  std::int64_t eval(std::int64_t n) const {
    switch (op) {
      case Op::Num: return value;
      case Op::N: return n;
      case Op::Add: return args[0].eval(n) + args[1].eval(n);
      case Op::Sub: return args[0].eval(n) - args[1].eval(n);
      case Op::Mul: return args[0].eval(n) * args[1].eval(n);
      case Op::Div: {
        auto d = args[1].eval(n);
        if (d == 0) throw Error(Errc::Parse, "division by zero in size function");
        auto q = args[0].eval(n) / d;
        return q;
      }
      case Op::Sqrt: {
        auto x = std::max<std::int64_t>(0, args[0].eval(n));
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
        while (r * r > x) --r;
        while ((r + 1) * (r + 1) <= x) ++r;
        return r;
      }
      case Op::Log2: {
        auto x = args[0].eval(n);
        std::int64_t r = 0;
        while (x > 1) {
          x >>= 1;
          ++r;
        }
        return r;
      }
    }
    return 0;
  }
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Expr parse() {
    auto e = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::Parse, "size function '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  static Expr node(Expr::Op op, Expr a, Expr b) {
    Expr e;
    e.op = op;
    e.args = {std::move(a), std::move(b)};
    return e;
  }
  Expr sum() {
    auto e = product();
    while (true) {
      if (eat('+')) e = node(Expr::Op::Add, std::move(e), product());
      else if (eat('-')) e = node(Expr::Op::Sub, std::move(e), product());
      else return e;
    }
  }
  Expr product() {
    auto e = atom();
    while (true) {
      if (eat('*')) e = node(Expr::Op::Mul, std::move(e), atom());
      else if (eat('/')) e = node(Expr::Op::Div, std::move(e), atom());
      else return e;
    }
  }
  Expr atom() {
    skip();
    if (eat('(')) {
      auto e = sum();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      Expr e;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        e.value = e.value * 10 + (s_[i_++] - '0');
      return e;
    }
    std::string word;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) word += s_[i_++];
    if (word == "n") {
      Expr e;
      e.op = Expr::Op::N;
      return e;
    }
    if (word == "sqrt" || word == "log2") {
      if (!eat('(')) fail("expected '(' after " + word);
      Expr e;
      e.op = word == "sqrt" ? Expr::Op::Sqrt : Expr::Op::Log2;
      e.args.push_back(sum());
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    fail(word.empty() ? "expected a term" : "unknown name '" + word + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

SizeFunction SizeFunction::parse(std::string_view expression) {
  auto e = std::make_shared<Expr>(ExprParser(expression).parse());
  return SizeFunction(std::string(expression), [e](std::uint64_t n) -> std::uint64_t {
    return static_cast<std::uint64_t>(std::max<std::int64_t>(0, e->eval(static_cast<std::int64_t>(n))));
  });
}

std::optional<std::uint64_t> SizeFunction::contract_violation(std::uint64_t threshold, std::uint64_t hi) const {
  std::uint64_t prev = fn_(0);
  for (std::uint64_t n = 1; n <= hi; ++n) {
    auto v = fn_(n);
    if (v < prev || (n >= threshold && v >= n)) return n;
    prev = v;
  }
  return std::nullopt;
}

SuccinctVerdict is_f_succinct(const Program& p, const SyntacticAlgorithm& a, const ProgramLabelling& phi,
                              const SizeFunction& f) {
  SuccinctVerdict v;
  v.size_program = size(p);
  v.size_algorithm = size(a);
  v.bound = f(v.size_program);
  v.implements = check_implements(p, a, phi).implements;
  return v;
}

// ---------------------------------------------------------------------------
// Decomposition search

namespace {

enum class Role : std::uint8_t { Free, Boundary, Internal };

struct Segment {
  std::size_t lib;
  int from;
  int to;
  std::vector<int> internal;
  std::vector<std::size_t> edges;
};

class Decomposer {
 public:
  Decomposer(const Program& p, const Library& library, const SizeFunction& f, std::size_t budget)
      : p_(p), lib_(library), f_(f), budget_(budget) {
    const auto& g = p.graph;
    auto n = g.states.size();
    role_.assign(n, Role::Free);
    boundary_refs_.assign(n, 0);
    covered_.assign(g.edges.size(), 0);
    indeg_.assign(n, 0);
    outdeg_.assign(n, 0);
    out_.resize(n);
    in_.resize(n);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
      const auto& e = g.edges[j];
      ++outdeg_[e.from];
      ++indeg_[e.to];
      out_[e.from].push_back(j);
      in_[e.to].push_back(j);
    }
    for (std::size_t k = 0; k < lib_.size(); ++k)
      if (usable(lib_[k].second)) order_.push_back(k);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return lib_[a].second.graph.edges.size() > lib_[b].second.graph.edges.size();
    });
  }

  FindResult run() {
    FindResult r;
    try {
      search();
    } catch (const Exhausted&) {
      r.budget_exhausted = true;
    }
    r.witness = std::move(found_);
    r.nodes = nodes_;
    return r;
  }

 private:
  struct Exhausted {};

  bool usable(const Program& q) const {
    const auto& g = q.graph;
    if (q.model != p_.model || g.initial == g.terminal || g.edges.empty()) return false;
    std::vector<int> deg(g.states.size(), 0);
    for (const auto& e : g.edges) ++deg[e.from], ++deg[e.to];
    for (int d : deg)
      if (d == 0) return false;
    return true;
  }

  void tick() {
    if (++nodes_ > budget_) throw Exhausted{};
  }

  bool search() {
    tick();
    std::size_t e = 0;
    while (e < covered_.size() && covered_[e]) ++e;
    if (e == covered_.size()) return finish();
    for (auto k : order_) {
      const auto& q = lib_[k].second.graph;
      for (std::size_t qe = 0; qe < q.edges.size(); ++qe) {
        if (q.edges[qe].label != p_.graph.edges[e].label) continue;
        Embedding emb(q);
        if (!emb.try_edge(*this, qe, e)) continue;
        if (embed(k, emb, edge_order(q, qe), 1)) return true;
      }
    }
    return false;
  }

  // Edges of q in breadth-first order from `first`, so each later edge
  // touches an already mapped state.
  static std::vector<std::size_t> edge_order(const ControlGraph& q, std::size_t first) {
    std::vector<std::size_t> order{first};
    std::vector<char> seen_edge(q.edges.size(), 0), seen_state(q.states.size(), 0);
    seen_edge[first] = 1;
    seen_state[q.edges[first].from] = seen_state[q.edges[first].to] = 1;
    while (order.size() < q.edges.size()) {
      bool progress = false;
      for (std::size_t j = 0; j < q.edges.size(); ++j) {
        if (seen_edge[j]) continue;
        if (seen_state[q.edges[j].from] || seen_state[q.edges[j].to]) {
          seen_edge[j] = 1;
          seen_state[q.edges[j].from] = seen_state[q.edges[j].to] = 1;
          order.push_back(j);
          progress = true;
        }
      }
      if (!progress)
        for (std::size_t j = 0; j < q.edges.size(); ++j)
          if (!seen_edge[j]) {
            seen_edge[j] = 1;
            seen_state[q.edges[j].from] = seen_state[q.edges[j].to] = 1;
            order.push_back(j);
            break;
          }
    }
    return order;
  }

  struct Embedding {
    const ControlGraph& q;
    std::vector<int> state;             // q state -> P state
    std::vector<std::size_t> edge;      // q edge -> P edge
    std::map<int, std::vector<int>> owner;  // P state -> q states
    std::set<std::size_t> used_edges;

    explicit Embedding(const ControlGraph& g)
        : q(g), state(g.states.size(), -1), edge(g.edges.size(), SIZE_MAX) {}

    bool boundary(int qs) const { return qs == q.initial || qs == q.terminal; }

    bool can_assign(const Decomposer& d, int qs, int ps) const {
      if (state[qs] >= 0) return state[qs] == ps;
      auto it = owner.find(ps);
      if (it != owner.end()) {
        // Only the initial and terminal images may coincide.
        for (int other : it->second)
          if (!(boundary(qs) && boundary(other))) return false;
      }
      if (boundary(qs)) return d.role_[ps] != Role::Internal;
      if (d.role_[ps] != Role::Free || ps == d.p_.graph.initial || ps == d.p_.graph.terminal) return false;
      std::size_t in = 0, out = 0;
      for (const auto& e : q.edges) {
        if (e.from == qs) ++out;
        if (e.to == qs) ++in;
      }
      return d.indeg_[ps] == in && d.outdeg_[ps] == out;
    }

    // Maps q edge qe onto P edge pe, extending the state map; no change on failure.
    bool try_edge(const Decomposer& d, std::size_t qe, std::size_t pe) {
      const auto& a = q.edges[qe];
      const auto& b = d.p_.graph.edges[pe];
      if (a.label != b.label || d.covered_[pe] || used_edges.count(pe)) return false;
      if (!can_assign(d, a.from, b.from)) return false;
      bool new_from = state[a.from] < 0;
      if (new_from) set(a.from, b.from);
      if (!can_assign(d, a.to, b.to)) {
        if (new_from) unset(a.from);
        return false;
      }
      if (state[a.to] < 0) set(a.to, b.to);
      edge[qe] = pe;
      used_edges.insert(pe);
      return true;
    }

    void set(int qs, int ps) {
      state[qs] = ps;
      owner[ps].push_back(qs);
    }
    void unset(int qs) {
      auto& v = owner[state[qs]];
      v.erase(std::find(v.begin(), v.end(), qs));
      if (v.empty()) owner.erase(state[qs]);
      state[qs] = -1;
    }
  };

  bool embed(std::size_t lib, Embedding& emb, const std::vector<std::size_t>& order, std::size_t k) {
    tick();
    if (k == order.size()) return commit_and_recurse(lib, emb);
    auto qe = order[k];
    const auto& a = emb.q.edges[qe];
    std::vector<std::size_t> candidates;
    if (emb.state[a.from] >= 0) {
      candidates = out_[emb.state[a.from]];
    } else if (emb.state[a.to] >= 0) {
      candidates = in_[emb.state[a.to]];
    } else {
      candidates.resize(p_.graph.edges.size());
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (auto pe : candidates) {
      auto before = emb.state;
      if (!emb.try_edge(*this, qe, pe)) continue;
      if (embed(lib, emb, order, k + 1)) return true;
      emb.used_edges.erase(pe);
      emb.edge[qe] = SIZE_MAX;
      for (std::size_t s = 0; s < before.size(); ++s)
        if (before[s] < 0 && emb.state[s] >= 0) emb.unset(static_cast<int>(s));
    }
    return false;
  }

  bool commit_and_recurse(std::size_t lib, const Embedding& emb) {
    const auto& q = emb.q;
    Segment seg{lib, emb.state[q.initial], emb.state[q.terminal], {}, {}};
    for (std::size_t s = 0; s < q.states.size(); ++s)
      if (!emb.boundary(static_cast<int>(s))) seg.internal.push_back(emb.state[s]);
    seg.edges = emb.edge;

    for (int s : seg.internal) role_[s] = Role::Internal;
    for (int s : {seg.from, seg.to}) {
      ++boundary_refs_[s];
      role_[s] = Role::Boundary;
    }
    if (seg.from == seg.to) --boundary_refs_[seg.from];
    for (auto e : seg.edges) covered_[e] = 1;
    segments_.push_back(seg);

    bool ok = search();
    if (ok) return true;

    segments_.pop_back();
    for (auto e : seg.edges) covered_[e] = 0;
    if (seg.from == seg.to) ++boundary_refs_[seg.from];
    for (int s : {seg.from, seg.to})
      if (--boundary_refs_[s] == 0) role_[s] = Role::Free;
    for (int s : seg.internal) role_[s] = Role::Free;
    return false;
  }

  bool finish() {
    const auto& g = p_.graph;
    SyntacticAlgorithm a;
    std::vector<int> vertex(g.states.size(), -1);
    for (std::size_t s = 0; s < g.states.size(); ++s)
      if (role_[s] != Role::Internal) vertex[s] = a.graph.add_state(g.states[s]);
    a.graph.initial = vertex[g.initial];
    a.graph.terminal = vertex[g.terminal];
    ProgramLabelling phi;
    phi.model = p_.model;
    for (const auto& seg : segments_) {
      const auto& [name, prog] = lib_[seg.lib];
      if (!phi.map.count(name)) {
        phi.map[name] = prog;
        a.labels.push_back(name);
      }
      a.graph.add_edge(vertex[seg.from], vertex[seg.to], name);
    }
    auto verdict = is_f_succinct(p_, a, phi, f_);
    if (!verdict.succinct()) return false;
    found_ = SuccinctWitness{std::move(a), std::move(phi), verdict};
    return true;
  }

  const Program& p_;
  const Library& lib_;
  const SizeFunction& f_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Role> role_;
  std::vector<int> boundary_refs_;
  std::vector<char> covered_;
  std::vector<std::size_t> indeg_, outdeg_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::vector<std::size_t> order_;
  std::vector<Segment> segments_;
  std::optional<SuccinctWitness> found_;
};

}  // namespace

FindResult find_succinct(const Program& p, const Library& library, const SizeFunction& f, std::size_t budget) {
  return Decomposer(p, library, f, budget).run();
}

// ---------------------------------------------------------------------------
// Census

namespace {

using EdgeKey = std::tuple<int, int, int>;  // from, to, instruction index

std::vector<EdgeKey> canonical(const std::vector<EdgeKey>& edges, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<EdgeKey> best;
  do {
    std::vector<EdgeKey> mapped;
    for (const auto& [a, b, l] : edges) mapped.emplace_back(perm[a], perm[b], l);
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
  return best;
}

Program census_program(const std::string& model, const std::vector<std::string>& instructions, int k,
                       const std::vector<EdgeKey>& edges) {
  Program p;
  p.model = model;
  for (int s = 0; s < k; ++s) p.graph.add_state("q" + std::to_string(s));
  p.graph.initial = 0;
  p.graph.terminal = 1;
  for (const auto& [a, b, l] : edges) p.graph.add_edge(a, b, instructions[l]);
  return p;
}

}  // namespace

CensusResult census(std::size_t n_max, const SizeFunction& f, const std::string& model,
                    const std::vector<std::string>& instructions, std::size_t budget, const Library& library) {
  CensusResult result;
  const int labels = static_cast<int>(instructions.size());
  for (std::size_t n = 2; n <= n_max; ++n) {
    CensusRow row;
    row.n = n;
    for (int k = 2; k <= static_cast<int>(n); ++k) {
      const std::size_t m = n - k;
      std::vector<EdgeKey> types;
      for (int a = 0; a < k; ++a) {
        if (a == 1) continue;  // nothing leaves the terminal state
        for (int b = 0; b < k; ++b)
          for (int l = 0; l < labels; ++l) types.emplace_back(a, b, l);
      }
      if (m > 0 && types.empty()) continue;
      std::set<std::vector<EdgeKey>> seen;
      // Multisets of m edge types as nondecreasing index sequences.
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        std::vector<EdgeKey> edges;
        for (auto i : idx) edges.push_back(types[i]);
        auto canon = canonical(edges, k);
        if (seen.insert(canon).second) {
          ++row.programs;
          auto p = census_program(model, instructions, k, canon);
          auto r = find_succinct(p, library, f, budget);
          if (r.budget_exhausted) result.truncated = true;
          if (r.witness) ++row.succinct;
        }
        std::size_t pos = m;
        while (pos > 0 && idx[pos - 1] == types.size() - 1) --pos;
        if (pos == 0) break;
        auto v = idx[pos - 1] + 1;
        for (auto j = pos - 1; j < m; ++j) idx[j] = v;
      }
    }
    result.rows.push_back(row);
  }
  return result;
}

std::string CensusResult::csv() const {
  std::ostringstream os;
  os << "n,programs_enumerated,succinct_count,fraction\n";
  for (const auto& r : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.fraction());
    os << r.n << "," << r.programs << "," << r.succinct << "," << buf << "\n";
  }
  return os.str();
}

Library chain_library(const std::string& model, const std::vector<std::string>& instructions) {
  Library lib;
  for (const auto& a : instructions)
    for (const auto& b : instructions) {
      Program p;
      p.model = model;
      p.graph.initial = p.graph.add_state("i");
      p.graph.add_state("m");
      p.graph.terminal = p.graph.add_state("t");
      p.graph.add_edge(0, 1, a);
      p.graph.add_edge(1, 2, b);
      lib.emplace_back(a + ";" + b, std::move(p));
    }
  return lib;
}

}  // namespace algoglue
