#include "algoglue/data_structures.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "algoglue/error.hpp"

namespace algoglue {

std::optional<std::vector<Tuple>> enumerate_tuples(const DataDomain& d, std::size_t k,
                                                   std::size_t limit) {
  if (!d.nth) return std::nullopt;
  std::vector<Tuple> out;
  if (limit == 0) return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  auto emit = [&](const std::vector<std::size_t>& idx) {
    Tuple t;
    for (auto i : idx) t.push_back(*d.nth(i));
    out.push_back(std::move(t));
  };
  if (d.cardinality) {
    auto c = *d.cardinality;
    if (c == 0) return out;
    std::vector<std::size_t> idx(k, 0);
    while (out.size() < limit) {
      emit(idx);
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < c) break;
        idx[pos] = 0;
        if (pos == 0) return out;
      }
    }
    return out;
  }
  for (std::size_t m = 0; out.size() < limit; ++m) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      if (*std::max_element(idx.begin(), idx.end()) == m) {
        emit(idx);
        if (out.size() >= limit) return out;
      }
      std::size_t pos = k;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] <= m) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

std::optional<Tuple> StructuralMap::apply(std::span<const Value> args) const {
  if (args.size() != dom)
    throw Error(Errc::ArityMismatch, name + " expects " + std::to_string(dom) + " arguments, got " +
                                         std::to_string(args.size()));
  auto r = fn(args);
  if (r && r->size() != im)
    throw Error(Errc::ArityMismatch, name + " returned " + std::to_string(r->size()) + " values, declared " +
                                         std::to_string(im));
  return r;
}

AnchoredOperation::AnchoredOperation(StructuralMap m, std::vector<std::string> in,
                                     std::vector<std::string> out)
    : map(std::move(m)), inputs(std::move(in)), outputs(std::move(out)) {
  if (inputs.size() != map.dom || outputs.size() != map.im)
    throw Error(Errc::ArityMismatch, "anchoring of " + map.name + " has " + std::to_string(inputs.size()) +
                                         " inputs / " + std::to_string(outputs.size()) + " outputs, map is " +
                                         std::to_string(map.dom) + " -> " + std::to_string(map.im));
  std::set<std::string> distinct(outputs.begin(), outputs.end());
  if (distinct.size() != outputs.size())
    throw Error(Errc::FrameMismatch, "repeated output variable in anchoring of " + map.name);
}

namespace {

std::string join(const std::vector<std::string>& v, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string AnchoredOperation::name() const {
  return map.name + "@(" + join(inputs) + ")->(" + join(outputs) + ")";
}

std::optional<Environment> AnchoredOperation::apply(const Environment& env) const {
  Tuple args;
  args.reserve(inputs.size());
  for (const auto& v : inputs) args.push_back(env.get(v));
  auto r = map.apply(args);
  if (!r) return std::nullopt;
  Environment out = env;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (!env.has(outputs[i])) throw Error(Errc::UnknownVariable, outputs[i]);
    out.set(outputs[i], std::move((*r)[i]));
  }
  return out;
}

std::optional<AnchoredOperation> AnchoredOperation::leading() const {
  if (!map.composite || map.composite->pipeline.empty()) return *this;
  const auto& comp = *map.composite;
  auto inner = comp.pipeline.front().leading();
  if (!inner) return std::nullopt;
  auto outer = [&](const std::string& v) -> std::optional<std::string> {
    for (std::size_t i = 0; i < comp.inputs.size(); ++i)
      if (comp.inputs[i] == v) return inputs[i];
    return std::nullopt;
  };
  for (auto& v : inner->inputs) {
    auto o = outer(v);
    if (!o) return std::nullopt;
    v = *o;
  }
  return inner;
}

AnchoredOperation AnchoredOperation::renamed(
    const std::function<std::string(const std::string&)>& rename) const {
  AnchoredOperation a = *this;
  for (auto& v : a.inputs) v = rename(v);
  for (auto& v : a.outputs) v = rename(v);
  return a;
}

AnchorName parse_anchor_name(std::string_view text) {
  auto at = text.find("@(");
  auto arrow = text.find(")->(");
  if (at == std::string_view::npos || arrow == std::string_view::npos || arrow < at || text.back() != ')')
    throw Error(Errc::Parse, "malformed anchored operation '" + std::string(text) + "'");
  AnchorName a;
  a.map = std::string(text.substr(0, at));
  auto split = [](std::string_view s) {
    std::vector<std::string> out;
    if (trim(s).empty()) return out;
    for (auto& p : split_top_level(s, ',')) out.push_back(p);
    return out;
  };
  a.inputs = split(text.substr(at + 2, arrow - at - 2));
  a.outputs = split(text.substr(arrow + 4, text.size() - arrow - 5));
  return a;
}

AbstractDataStructure::AbstractDataStructure(std::string name, DataDomain domain)
    : name_(std::move(name)), domain_(std::move(domain)) {}

void AbstractDataStructure::add(StructuralMap m) {
  if (find(m.name)) throw Error(Errc::ConventionViolation, "duplicate structural map '" + m.name + "'");
  maps_.push_back(std::move(m));
}

void AbstractDataStructure::declare_disjoint(std::string a, std::string b) {
  disjoint_.emplace_back(std::move(a), std::move(b));
}

const StructuralMap* AbstractDataStructure::find(std::string_view name) const {
  for (const auto& m : maps_)
    if (m.name == name) return &m;
  return nullptr;
}

const StructuralMap& AbstractDataStructure::map(std::string_view name) const {
  if (const auto* m = find(name)) return *m;
  throw Error(Errc::UnknownName, "structure " + name_ + " has no map '" + std::string(name) + "'");
}

bool AbstractDataStructure::disjoint(std::string_view a, std::string_view b) const {
  if (a == "bottom" || b == "bottom") return true;
  return std::any_of(disjoint_.begin(), disjoint_.end(), [&](const auto& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

AnchoredOperation AbstractDataStructure::anchor(std::string_view m, std::vector<std::string> in,
                                                std::vector<std::string> out) const {
  return AnchoredOperation(map(m), std::move(in), std::move(out));
}

std::size_t maximal_arity(const AbstractDataStructure& d) {
  std::size_t a = 0;
  for (const auto& m : d.maps()) a = std::max({a, m.dom, m.im});
  return a;
}

StructurePtr product(const AbstractDataStructure& left, const AbstractDataStructure& right) {
  const auto& dl = left.domain();
  const auto& dr = right.domain();
  DataDomain d;
  d.name = dl.name + " x " + dr.name;
  d.default_size = std::max(dl.default_size, dr.default_size);
  d.sample = [dl, dr](Rng& rng, std::uint64_t size) {
    auto a = dl.sample(rng, size);
    auto b = dr.sample(rng, size);
    return Value::tuple({a, b});
  };
  if (dl.nth && dr.nth) {
    d.nth = [dl, dr](std::size_t i) -> std::optional<Value> {
      // Cantor unpairing
      std::size_t w = 0;
      while ((w + 1) * (w + 2) / 2 <= i) ++w;
      std::size_t y = i - w * (w + 1) / 2;
      std::size_t x = w - y;
      auto a = dl.nth(x);
      auto b = dr.nth(y);
      if (!a || !b) return std::nullopt;
      return Value::tuple({*a, *b});
    };
  }
  if (dl.cardinality && dr.cardinality) d.cardinality = *dl.cardinality * *dr.cardinality;
  d.render = [dl, dr](const Value& v) {
    const auto& t = v.as_tuple();
    return "(" + dl.render(t.at(0)) + "," + dr.render(t.at(1)) + ")";
  };
  d.parse = [dl, dr](std::string_view text) {
    auto t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw Error(Errc::Parse, "expected a pair, got '" + t + "'");
    auto parts = split_top_level(std::string_view(t).substr(1, t.size() - 2), ',');
    if (parts.size() != 2) throw Error(Errc::Parse, "expected a pair, got '" + t + "'");
    return Value::tuple({dl.parse(parts[0]), dr.parse(parts[1])});
  };
  d.default_value = Value::tuple({dl.default_value, dr.default_value});

  auto out = std::make_shared<AbstractDataStructure>(left.name() + " x " + right.name(), std::move(d));
  auto lift = [](const StructuralMap& s, std::size_t component, const std::string& prefix) {
    StructuralMap m;
    m.name = prefix + s.name;
    m.dom = s.dom;
    m.im = s.im;
    m.guard = s.guard;
    m.fn = [s, component](std::span<const Value> args) -> std::optional<Tuple> {
      Tuple acted;
      Tuple passive;
      for (const auto& a : args) {
        const auto& pair = a.as_tuple();
        acted.push_back(pair.at(component));
        passive.push_back(pair.at(1 - component));
      }
      if (passive.empty() && s.im > 0) return std::nullopt;
      auto r = s.apply(acted);
      if (!r) return std::nullopt;
      Tuple result;
      for (std::size_t j = 0; j < r->size(); ++j) {
        const auto& other = passive[std::min(j, passive.size() - 1)];
        result.push_back(component == 0 ? Value::tuple({(*r)[j], other}) : Value::tuple({other, (*r)[j]}));
      }
      return result;
    };
    return m;
  };
  for (const auto& s : left.maps()) out->add(lift(s, 0, "left."));
  for (const auto& s : right.maps()) out->add(lift(s, 1, "right."));
  for (const auto& [a, b] : left.disjoint_pairs()) out->declare_disjoint("left." + a, "left." + b);
  for (const auto& [a, b] : right.disjoint_pairs()) out->declare_disjoint("right." + a, "right." + b);
  return out;
}

StructuralMap compose_maps(std::string name, std::vector<std::string> frame,
                           std::vector<std::string> inputs, std::vector<std::string> outputs,
                           std::vector<AnchoredOperation> pipeline) {
  std::set<std::string> in_frame(frame.begin(), frame.end());
  std::set<std::string> written;
  auto require_frame = [&](const std::string& v) {
    if (!in_frame.count(v)) throw Error(Errc::FrameMismatch, "variable '" + v + "' escapes the frame of " + name);
  };
  for (const auto& v : inputs) {
    require_frame(v);
    written.insert(v);
  }
  for (const auto& v : outputs) require_frame(v);
  bool all_guards = true;
  for (const auto& stage : pipeline) {
    for (const auto& v : stage.inputs) {
      require_frame(v);
      if (!written.count(v))
        throw Error(Errc::FrameMismatch, "'" + v + "' is read before it is written in " + name);
    }
    for (const auto& v : stage.outputs) {
      require_frame(v);
      written.insert(v);
    }
    all_guards = all_guards && stage.map.guard;
  }
  for (const auto& v : outputs)
    if (!written.count(v)) throw Error(Errc::FrameMismatch, "output '" + v + "' is never written in " + name);

  auto comp = std::make_shared<Composite>(Composite{frame, inputs, outputs, std::move(pipeline)});
  StructuralMap m;
  m.name = std::move(name);
  m.dom = inputs.size();
  m.im = outputs.size();
  m.guard = all_guards && comp->inputs == comp->outputs;
  m.composite = comp;
  m.fn = [comp](std::span<const Value> args) -> std::optional<Tuple> {
    Environment env;
    for (const auto& v : comp->frame) env.set(v, Value());
    for (std::size_t i = 0; i < comp->inputs.size(); ++i) env.set(comp->inputs[i], args[i]);
    for (const auto& stage : comp->pipeline) {
      auto next = stage.apply(env);
      if (!next) return std::nullopt;
      env = std::move(*next);
    }
    Tuple out;
    for (const auto& v : comp->outputs) out.push_back(env.get(v));
    return out;
  };
  return m;
}

StructuralMap compose_maps(std::string name, std::vector<std::string> frame,
                           std::vector<AnchoredOperation> pipeline) {
  auto in = frame;
  auto out = frame;
  return compose_maps(std::move(name), std::move(frame), std::move(in), std::move(out), std::move(pipeline));
}

StructuralMap identity_map(std::size_t arity) {
  StructuralMap m;
  m.name = arity == 1 ? "id" : "id" + std::to_string(arity);
  m.dom = arity;
  m.im = arity;
  m.guard = true;
  m.fn = [](std::span<const Value> args) -> std::optional<Tuple> { return Tuple(args.begin(), args.end()); };
  return m;
}

StructuralMap bottom_map() {
  StructuralMap m;
  m.name = "bottom";
  m.guard = true;
  m.fn = [](std::span<const Value>) -> std::optional<Tuple> { return std::nullopt; };
  return m;
}

namespace {

using Fn = std::function<std::optional<Tuple>(std::span<const Value>)>;

StructuralMap make(std::string name, std::size_t dom, std::size_t im, Fn fn, bool guard = false) {
  StructuralMap m;
  m.name = std::move(name);
  m.dom = dom;
  m.im = im;
  m.fn = std::move(fn);
  m.guard = guard;
  return m;
}

/// Partial identity on the tuples satisfying `pred`.
StructuralMap guard_map(std::string name, std::size_t arity, std::function<bool(std::span<const Value>)> pred) {
  return make(std::move(name), arity, arity, [pred](std::span<const Value> a) -> std::optional<Tuple> {
    if (!pred(a)) return std::nullopt;
    return Tuple(a.begin(), a.end());
  }, true);
}

std::optional<Tuple> one(std::uint64_t n) { return Tuple{Value::nat(n)}; }

DataDomain nat_domain() {
  DataDomain d;
  d.name = "N";
  d.default_size = 1000;
  d.sample = [](Rng& rng, std::uint64_t size) {
    return Value::nat(std::uniform_int_distribution<std::uint64_t>(0, size)(rng));
  };
  d.nth = [](std::size_t i) -> std::optional<Value> { return Value::nat(i); };
  d.render = [](const Value& v) { return std::to_string(v.as_nat()); };
  d.parse = [](std::string_view s) {
    auto v = parse_value(s);
    v.as_nat();
    return v;
  };
  d.default_value = Value::nat(0);
  return d;
}

}  // namespace

StructurePtr booleans() {
  DataDomain d;
  d.name = "B";
  d.default_size = 1;
  d.sample = [](Rng& rng, std::uint64_t) { return Value::nat(std::uniform_int_distribution<int>(0, 1)(rng)); };
  d.nth = [](std::size_t i) -> std::optional<Value> {
    if (i > 1) return std::nullopt;
    return Value::nat(i);
  };
  d.cardinality = 2;
  d.render = [](const Value& v) { return std::to_string(v.as_nat()); };
  d.parse = [](std::string_view s) {
    auto v = parse_value(s);
    if (v.as_nat() > 1) throw Error(Errc::Parse, "not a boolean: '" + std::string(s) + "'");
    return v;
  };
  d.default_value = Value::nat(0);

  auto b = std::make_shared<AbstractDataStructure>("booleans", std::move(d));
  b->add(guard_map("read0", 1, [](auto a) { return a[0].as_nat() == 0; }));
  b->add(guard_map("read1", 1, [](auto a) { return a[0].as_nat() == 1; }));
  b->add(make("and", 2, 1, [](auto a) { return one(a[0].as_nat() * a[1].as_nat()); }));
  b->add(make("or", 2, 1, [](auto a) {
    auto m = a[0].as_nat(), n = a[1].as_nat();
    return one(m + n - m * n);
  }));
  b->add(make("not", 1, 1, [](auto a) { return one(1 - a[0].as_nat()); }));
  b->declare_disjoint("read0", "read1");
  return b;
}

StructurePtr naturals_basic() {
  auto n = std::make_shared<AbstractDataStructure>("naturals_basic", nat_domain());
  n->add(guard_map("read0", 1, [](auto a) { return a[0].as_nat() == 0; }));
  n->add(guard_map("readS", 1, [](auto a) { return a[0].as_nat() != 0; }));
  n->add(make("succ", 1, 1, [](auto a) -> std::optional<Tuple> {
    auto x = a[0].as_nat();
    if (x == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return one(x + 1);
  }));
  n->declare_disjoint("read0", "readS");
  return n;
}

StructurePtr naturals() {
  auto n = std::make_shared<AbstractDataStructure>("naturals", nat_domain());
  auto basic = naturals_basic();
  for (const auto& m : basic->maps()) n->add(m);
  n->add(make("pred", 1, 1, [](auto a) -> std::optional<Tuple> {
    if (a[0].as_nat() == 0) return std::nullopt;
    return one(a[0].as_nat() - 1);
  }));
  n->add(make("add", 2, 1, [](auto a) -> std::optional<Tuple> {
    std::uint64_t r;
    if (__builtin_add_overflow(a[0].as_nat(), a[1].as_nat(), &r)) return std::nullopt;
    return one(r);
  }));
  n->add(make("mult", 2, 1, [](auto a) -> std::optional<Tuple> {
    std::uint64_t r;
    if (__builtin_mul_overflow(a[0].as_nat(), a[1].as_nat(), &r)) return std::nullopt;
    return one(r);
  }));
  n->add(make("sub", 2, 1, [](auto a) -> std::optional<Tuple> {
    if (a[0].as_nat() < a[1].as_nat()) return std::nullopt;
    return one(a[0].as_nat() - a[1].as_nat());
  }));
  n->add(make("mod", 2, 1, [](auto a) -> std::optional<Tuple> {
    if (a[1].as_nat() == 0) return std::nullopt;
    return one(a[0].as_nat() % a[1].as_nat());
  }));
  n->add(make("div", 2, 1, [](auto a) -> std::optional<Tuple> {
    if (a[1].as_nat() == 0) return std::nullopt;
    return one(a[0].as_nat() / a[1].as_nat());
  }));
  n->add(guard_map("geq", 2, [](auto a) { return a[0].as_nat() >= a[1].as_nat(); }));
  n->add(guard_map("lt", 2, [](auto a) { return a[0].as_nat() < a[1].as_nat(); }));
  n->add(make("swap", 2, 2, [](auto a) -> std::optional<Tuple> { return Tuple{a[1], a[0]}; }));
  n->add(identity_map(1));
  n->add(make("const_0", 0, 1, [](auto) { return one(0); }));
  n->add(make("const_1", 0, 1, [](auto) { return one(1); }));
  n->declare_disjoint("read0", "readS");
  n->declare_disjoint("read0", "pred");
  n->declare_disjoint("geq", "lt");
  return n;
}

StructurePtr lists_of_naturals() {
  DataDomain d;
  d.name = "List(N)";
  d.default_size = 8;
  d.sample = [](Rng& rng, std::uint64_t size) {
    auto len = std::uniform_int_distribution<std::uint64_t>(0, size)(rng);
    Value::List items;
    std::uniform_int_distribution<std::uint64_t> elem(0, 99);
    for (std::uint64_t i = 0; i < len; ++i) items.push_back(elem(rng));
    return Value::list(std::move(items));
  };
  d.render = [](const Value& v) { return v.str(); };
  d.parse = [](std::string_view s) {
    auto v = parse_value(s);
    v.as_list();
    return v;
  };
  d.default_value = Value::list({});

  using L = Value::List;
  auto list1 = [](L l) -> std::optional<Tuple> { return Tuple{Value::list(std::move(l))}; };
  auto s = std::make_shared<AbstractDataStructure>("lists", std::move(d));
  s->add(guard_map("isnil", 1, [](auto a) { return a[0].as_list().empty(); }));
  s->add(guard_map("nonnil", 1, [](auto a) { return !a[0].as_list().empty(); }));
  s->add(guard_map("short", 1, [](auto a) { return a[0].as_list().size() <= 1; }));
  s->add(guard_map("long", 1, [](auto a) { return a[0].as_list().size() > 1; }));
  s->add(guard_map("both_nonnil", 2, [](auto a) { return !a[0].as_list().empty() && !a[1].as_list().empty(); }));
  s->add(guard_map("either_nil", 2, [](auto a) { return a[0].as_list().empty() || a[1].as_list().empty(); }));
  s->add(guard_map("le_fst", 2, [](auto a) {
    const auto &x = a[0].as_list(), &y = a[1].as_list();
    return !x.empty() && !y.empty() && x.front() <= y.front();
  }));
  s->add(guard_map("gt_fst", 2, [](auto a) {
    const auto &x = a[0].as_list(), &y = a[1].as_list();
    return !x.empty() && !y.empty() && x.front() > y.front();
  }));
  // fst keeps the carrier homogeneous: the head is returned as a singleton list.
  s->add(make("fst", 1, 1, [list1](auto a) -> std::optional<Tuple> {
    const auto& x = a[0].as_list();
    if (x.empty()) return std::nullopt;
    return list1({x.front()});
  }));
  s->add(make("queue", 1, 1, [list1](auto a) -> std::optional<Tuple> {
    const auto& x = a[0].as_list();
    if (x.empty()) return std::nullopt;
    return list1(L(x.begin() + 1, x.end()));
  }));
  s->add(make("append_head", 2, 1, [list1](auto a) -> std::optional<Tuple> {
    const auto& src = a[1].as_list();
    if (src.empty()) return std::nullopt;
    L y = a[0].as_list();
    y.push_back(src.front());
    return list1(std::move(y));
  }));
  s->add(make("concat", 2, 1, [list1](auto a) -> std::optional<Tuple> {
    L y = a[0].as_list();
    const auto& z = a[1].as_list();
    y.insert(y.end(), z.begin(), z.end());
    return list1(std::move(y));
  }));
  s->add(make("split", 1, 2, [](auto a) -> std::optional<Tuple> {
    const auto& x = a[0].as_list();
    L even, odd;
    for (std::size_t i = 0; i < x.size(); ++i) (i % 2 == 0 ? even : odd).push_back(x[i]);
    return Tuple{Value::list(std::move(even)), Value::list(std::move(odd))};
  }));
  s->add(make("nil", 0, 1, [list1](auto) { return list1({}); }));
  s->add(make("sort", 1, 1, [list1](auto a) -> std::optional<Tuple> {
    L x = a[0].as_list();
    std::sort(x.begin(), x.end());
    return list1(std::move(x));
  }));
  s->add(identity_map(1));
  s->declare_disjoint("isnil", "nonnil");
  s->declare_disjoint("short", "long");
  s->declare_disjoint("both_nonnil", "either_nil");
  s->declare_disjoint("le_fst", "gt_fst");
  return s;
}

namespace gf2 {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t mul(std::uint64_t a, std::uint64_t b, bool* overflow) {
  if (overflow) *overflow = a != 0 && b != 0 && degree(a) + degree(b) > 63;
  std::uint64_t r = 0;
  for (int i = 0; i < 64; ++i)
    if ((b >> i) & 1U) r ^= a << i;
  return r;
}

std::uint64_t divmod(std::uint64_t a, std::uint64_t b, std::uint64_t* rem) {
  if (b == 0) throw Error(Errc::ArityMismatch, "polynomial division by zero");
  std::uint64_t q = 0;
  int db = degree(b);
  while (degree(a) >= db) {
    int shift = degree(a) - db;
    q |= std::uint64_t{1} << shift;
    a ^= b << shift;
  }
  if (rem) *rem = a;
  return q;
}

std::string render(std::uint64_t p) {
  if (p == 0) return "0";
  std::string out;
  for (int i = 63; i >= 0; --i) {
    if (!((p >> i) & 1U)) continue;
    if (!out.empty()) out += "+";
    if (i == 0) out += "1";
    else if (i == 1) out += "x";
    else out += "x^" + std::to_string(i);
  }
  return out;
}

std::uint64_t parse(std::string_view text) {
  auto t = trim(text);
  if (t == "0") return 0;
  std::uint64_t p = 0;
  for (const auto& term : split_top_level(t, '+')) {
    int e = -1;
    if (term == "1") e = 0;
    else if (term == "x") e = 1;
    else if (term.size() > 2 && term.compare(0, 2, "x^") == 0) {
      try {
        e = std::stoi(term.substr(2));
      } catch (const std::exception&) {
        e = -1;
      }
    }
    if (e < 0 || e > 63) throw Error(Errc::Parse, "bad polynomial term '" + term + "'");
    p ^= std::uint64_t{1} << e;
  }
  return p;
}

}  // namespace gf2

StructurePtr gf2_polynomials() {
  DataDomain d;
  d.name = "GF2[x]";
  d.default_size = 5;
  d.sample = [](Rng& rng, std::uint64_t size) {
    auto deg = std::min<std::uint64_t>(size, 62);
    return Value::nat(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{2} << deg) - 1)(rng));
  };
  d.nth = [](std::size_t i) -> std::optional<Value> { return Value::nat(i); };
  d.render = [](const Value& v) { return gf2::render(v.as_nat()); };
  d.parse = [](std::string_view s) { return Value::nat(gf2::parse(s)); };
  d.default_value = Value::nat(0);

  auto s = std::make_shared<AbstractDataStructure>("gf2poly", std::move(d));
  s->add(guard_map("read0", 1, [](auto a) { return a[0].as_nat() == 0; }));
  s->add(guard_map("readS", 1, [](auto a) { return a[0].as_nat() != 0; }));
  s->add(make("add", 2, 1, [](auto a) { return one(a[0].as_nat() ^ a[1].as_nat()); }));
  s->add(make("sub", 2, 1, [](auto a) { return one(a[0].as_nat() ^ a[1].as_nat()); }));
  s->add(make("mult", 2, 1, [](auto a) -> std::optional<Tuple> {
    bool overflow = false;
    auto r = gf2::mul(a[0].as_nat(), a[1].as_nat(), &overflow);
    if (overflow) return std::nullopt;
    return one(r);
  }));
  s->add(make("div", 2, 1, [](auto a) -> std::optional<Tuple> {
    if (a[1].as_nat() == 0) return std::nullopt;
    return one(gf2::divmod(a[0].as_nat(), a[1].as_nat(), nullptr));
  }));
  s->add(make("mod", 2, 1, [](auto a) -> std::optional<Tuple> {
    if (a[1].as_nat() == 0) return std::nullopt;
    std::uint64_t r = 0;
    gf2::divmod(a[0].as_nat(), a[1].as_nat(), &r);
    return one(r);
  }));
  s->add(make("swap", 2, 2, [](auto a) -> std::optional<Tuple> { return Tuple{a[1], a[0]}; }));
  s->add(identity_map(1));
  s->add(make("const_0", 0, 1, [](auto) { return one(0); }));
  s->add(make("const_1", 0, 1, [](auto) { return one(1); }));
  s->declare_disjoint("read0", "readS");
  return s;
}

std::string induced_model_name(std::string_view structure, const std::vector<std::string>& vars) {
  return std::string(structure) + "[" + join(vars) + "]";
}

ModelOfComputation induced_model(const AbstractDataStructure& structure,
                                 const std::vector<std::string>& vars,
                                 const std::vector<AnchoredOperation>& anchors) {
  std::set<std::string> known(vars.begin(), vars.end());
  ModelOfComputation model(induced_model_name(structure.name(), vars), "environment");
  std::vector<const AnchoredOperation*> added;
  for (const auto& a : anchors) {
    for (const auto* list : {&a.inputs, &a.outputs})
      for (const auto& v : *list)
        if (!known.count(v))
          throw Error(Errc::UnknownVariable, "'" + v + "' used by " + a.name() + " is not among the model variables");
    auto name = a.name();
    if (model.has(name)) continue;
    model.add_instruction(name, [a](const Config& c) -> std::optional<Config> {
      const auto* env = std::get_if<Environment>(&c);
      if (!env) throw Error(Errc::ArityMismatch, "induced instruction applied to a tape");
      auto r = a.apply(*env);
      if (!r) return std::nullopt;
      return Config(std::move(*r));
    });
    added.push_back(&a);
  }
  for (std::size_t i = 0; i < added.size(); ++i)
    for (std::size_t j = i + 1; j < added.size(); ++j) {
      auto la = added[i]->leading();
      auto lb = added[j]->leading();
      if (la && lb && la->inputs == lb->inputs && structure.disjoint(la->map.name, lb->map.name))
        model.declare_disjoint(added[i]->name(), added[j]->name());
    }
  return model;
}

}  // namespace algoglue
