#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algoglue/data_structures.hpp"

namespace algoglue {

/// A general recursive function term. Arities are checked on construction.
class RecFunTerm {
 public:
  enum class Kind { Zero, Succ, Proj, Comp, PrimRec, Mu };

  /// Constant 0 of the given arity.
  static RecFunTerm zero(std::size_t arity = 0);
  static RecFunTerm succ();
  /// i-th of n arguments, 1-based.
  static RecFunTerm proj(std::size_t i, std::size_t n);
  static RecFunTerm comp(RecFunTerm f, std::vector<RecFunTerm> gs);
  /// h(0, xs) = base(xs); h(y+1, xs) = step(y, h(y, xs), xs).
  static RecFunTerm primrec(RecFunTerm base, RecFunTerm step);
  /// mu f (xs) = least y with f(xs, y) = 0.
  static RecFunTerm mu(RecFunTerm f);

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->arity; }
  std::size_t index() const { return node_->index; }
  const std::vector<RecFunTerm>& children() const { return node_->children; }

  /// `(primrec (proj 1 1) (comp succ (proj 2 3)))`
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::size_t arity;
    std::size_t index;
    std::vector<RecFunTerm> children;
  };
  explicit RecFunTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

RecFunTerm parse_recfun(std::string_view text);

struct RecFunResult {
  enum class Status { Value, Undefined, OutOfBudget };
  Status status = Status::Undefined;
  std::uint64_t value = 0;

  bool ok() const { return status == Status::Value; }
};

/// Each node evaluation (including each minimisation probe) costs one unit.
RecFunResult eval_recfun(const RecFunTerm& term, std::span<const std::uint64_t> args,
                         std::uint64_t budget);

RecFunTerm addition_term();
RecFunTerm multiplication_term();

/// A term as a structural map over the naturals. Budget exhaustion is
/// undefinedness.
StructuralMap wrap_recfun(const RecFunTerm& term, std::string name, std::uint64_t budget);

/// Naturals with the shipped terms (zero, succ, add, mult) as maps; further
/// terms are added through wrap_recfun.
StructurePtr recursive_functions(std::uint64_t budget);

}  // namespace algoglue
