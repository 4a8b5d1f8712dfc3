#include "algoglue/recfun.hpp"

#include <limits>

#include "algoglue/error.hpp"
#include "algoglue/sexpr.hpp"

namespace algoglue {

RecFunTerm RecFunTerm::zero(std::size_t arity) {
  return RecFunTerm(std::make_shared<const Node>(Node{Kind::Zero, arity, 0, {}}));
}

RecFunTerm RecFunTerm::succ() { return RecFunTerm(std::make_shared<const Node>(Node{Kind::Succ, 1, 0, {}})); }

RecFunTerm RecFunTerm::proj(std::size_t i, std::size_t n) {
  if (i < 1 || i > n)
    throw Error(Errc::ArityMismatch, "projection index " + std::to_string(i) + " out of 1.." + std::to_string(n));
  return RecFunTerm(std::make_shared<const Node>(Node{Kind::Proj, n, i, {}}));
}

RecFunTerm RecFunTerm::comp(RecFunTerm f, std::vector<RecFunTerm> gs) {
  if (f.arity() != gs.size())
    throw Error(Errc::ArityMismatch, "composition of a " + std::to_string(f.arity()) + "-ary function with " +
                                         std::to_string(gs.size()) + " arguments");
  std::size_t m = gs.empty() ? 0 : gs.front().arity();
  for (const auto& g : gs)
    if (g.arity() != m) throw Error(Errc::ArityMismatch, "composed arguments have different arities");
  std::vector<RecFunTerm> children{std::move(f)};
  for (auto& g : gs) children.push_back(std::move(g));
  return RecFunTerm(std::make_shared<const Node>(Node{Kind::Comp, m, 0, std::move(children)}));
}

RecFunTerm RecFunTerm::primrec(RecFunTerm base, RecFunTerm step) {
  if (step.arity() != base.arity() + 2)
    throw Error(Errc::ArityMismatch, "primitive recursion needs a step of arity base+2");
  auto n = base.arity() + 1;
  return RecFunTerm(std::make_shared<const Node>(Node{Kind::PrimRec, n, 0, {std::move(base), std::move(step)}}));
}

RecFunTerm RecFunTerm::mu(RecFunTerm f) {
  if (f.arity() == 0) throw Error(Errc::ArityMismatch, "minimisation of a 0-ary function");
  auto n = f.arity() - 1;
  return RecFunTerm(std::make_shared<const Node>(Node{Kind::Mu, n, 0, {std::move(f)}}));
}

std::string RecFunTerm::str() const {
  switch (kind()) {
    case Kind::Zero: return arity() == 0 ? "zero" : "(zero " + std::to_string(arity()) + ")";
    case Kind::Succ: return "succ";
    case Kind::Proj: return "(proj " + std::to_string(index()) + " " + std::to_string(arity()) + ")";
    case Kind::Comp: {
      std::string out = "(comp";
      for (const auto& c : children()) out += " " + c.str();
      return out + ")";
    }
    case Kind::PrimRec: return "(primrec " + children()[0].str() + " " + children()[1].str() + ")";
    case Kind::Mu: return "(mu " + children()[0].str() + ")";
  }
  return "?";
}

namespace {

std::size_t to_size(const SExpr& e) {
  if (!e.is_atom) throw Error(Errc::Parse, "expected a number, got " + e.str());
  try {
    std::size_t pos = 0;
    auto v = std::stoul(e.atom, &pos);
    if (pos != e.atom.size()) throw Error(Errc::Parse, "expected a number, got " + e.atom);
    return v;
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "expected a number, got " + e.atom);
  }
}

RecFunTerm from_sexpr(const SExpr& e) {
  if (e.is_atom) {
    if (e.atom == "zero") return RecFunTerm::zero();
    if (e.atom == "succ") return RecFunTerm::succ();
    throw Error(Errc::Parse, "unknown recursive-function atom '" + e.atom + "'");
  }
  if (e.items.empty() || !e.items[0].is_atom) throw Error(Errc::Parse, "malformed term " + e.str());
  const auto& head = e.items[0].atom;
  auto n = e.items.size();
  if (head == "zero" && n <= 2) return RecFunTerm::zero(n == 2 ? to_size(e.items[1]) : 0);
  if (head == "succ" && n == 1) return RecFunTerm::succ();
  if (head == "proj" && n == 3) return RecFunTerm::proj(to_size(e.items[1]), to_size(e.items[2]));
  if (head == "comp" && n >= 2) {
    std::vector<RecFunTerm> gs;
    for (std::size_t i = 2; i < n; ++i) gs.push_back(from_sexpr(e.items[i]));
    return RecFunTerm::comp(from_sexpr(e.items[1]), std::move(gs));
  }
  if (head == "primrec" && n == 3) return RecFunTerm::primrec(from_sexpr(e.items[1]), from_sexpr(e.items[2]));
  if (head == "mu" && n == 2) return RecFunTerm::mu(from_sexpr(e.items[1]));
  throw Error(Errc::Parse, "malformed term " + e.str());
}

class Evaluator {
 public:
  explicit Evaluator(std::uint64_t budget) : remaining_(budget) {}

  // nullopt with exhausted() false means undefined
  std::optional<std::uint64_t> eval(const RecFunTerm& t, std::span<const std::uint64_t> args) {
    if (!charge()) return std::nullopt;
    switch (t.kind()) {
      case RecFunTerm::Kind::Zero: return 0;
      case RecFunTerm::Kind::Succ:
        if (args[0] == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        return args[0] + 1;
      case RecFunTerm::Kind::Proj: return args[t.index() - 1];
      case RecFunTerm::Kind::Comp: {
        const auto& ch = t.children();
        std::vector<std::uint64_t> inner;
        for (std::size_t i = 1; i < ch.size(); ++i) {
          auto v = eval(ch[i], args);
          if (!v) return std::nullopt;
          inner.push_back(*v);
        }
        return eval(ch[0], inner);
      }
      case RecFunTerm::Kind::PrimRec: {
        const auto& base = t.children()[0];
        const auto& step = t.children()[1];
        auto rest = args.subspan(1);
        auto acc = eval(base, rest);
        if (!acc) return std::nullopt;
        std::vector<std::uint64_t> step_args(args.size() + 1);
        std::copy(rest.begin(), rest.end(), step_args.begin() + 2);
        for (std::uint64_t y = 0; y < args[0]; ++y) {
          step_args[0] = y;
          step_args[1] = *acc;
          acc = eval(step, step_args);
          if (!acc) return std::nullopt;
        }
        return acc;
      }
      case RecFunTerm::Kind::Mu: {
        std::vector<std::uint64_t> probe(args.begin(), args.end());
        probe.push_back(0);
        for (std::uint64_t y = 0;; ++y) {
          probe.back() = y;
          auto v = eval(t.children()[0], probe);
          if (!v) return std::nullopt;
          if (*v == 0) return y;
        }
      }
    }
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool charge() {
    if (remaining_ == 0) {
      exhausted_ = true;
      return false;
    }
    --remaining_;
    return true;
  }

  std::uint64_t remaining_;
  bool exhausted_ = false;
};

}  // namespace

RecFunTerm parse_recfun(std::string_view text) { return from_sexpr(parse_sexpr(text)); }

RecFunResult eval_recfun(const RecFunTerm& term, std::span<const std::uint64_t> args, std::uint64_t budget) {
  if (args.size() != term.arity())
    throw Error(Errc::ArityMismatch, term.str() + " is " + std::to_string(term.arity()) + "-ary, given " +
                                         std::to_string(args.size()) + " arguments");
  Evaluator ev(budget);
  auto v = ev.eval(term, args);
  if (v) return {RecFunResult::Status::Value, *v};
  if (ev.exhausted()) return {RecFunResult::Status::OutOfBudget, 0};
  return {RecFunResult::Status::Undefined, 0};
}

RecFunTerm addition_term() {
  return RecFunTerm::primrec(RecFunTerm::proj(1, 1), RecFunTerm::comp(RecFunTerm::succ(), {RecFunTerm::proj(2, 3)}));
}

RecFunTerm multiplication_term() {
  return RecFunTerm::primrec(RecFunTerm::zero(1),
                             RecFunTerm::comp(addition_term(), {RecFunTerm::proj(2, 3), RecFunTerm::proj(3, 3)}));
}

StructuralMap wrap_recfun(const RecFunTerm& term, std::string name, std::uint64_t budget) {
  StructuralMap m;
  m.name = std::move(name);
  m.dom = term.arity();
  m.im = 1;
  m.fn = [term, budget](std::span<const Value> args) -> std::optional<Tuple> {
    std::vector<std::uint64_t> xs;
    for (const auto& a : args) xs.push_back(a.as_nat());
    auto r = eval_recfun(term, xs, budget);
    if (!r.ok()) return std::nullopt;
    return Tuple{Value::nat(r.value)};
  };
  return m;
}

StructurePtr recursive_functions(std::uint64_t budget) {
  auto nat = naturals();
  auto s = std::make_shared<AbstractDataStructure>("recfun", nat->domain());
  s->add(wrap_recfun(RecFunTerm::zero(), "zero", budget));
  s->add(wrap_recfun(RecFunTerm::succ(), "succ", budget));
  s->add(wrap_recfun(addition_term(), "add", budget));
  s->add(wrap_recfun(multiplication_term(), "mult", budget));
  return s;
}

}  // namespace algoglue
