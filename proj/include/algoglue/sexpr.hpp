#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace algoglue {

/// Minimal s-expression: an atom or a parenthesised list. `;` starts a
/// comment that runs to the end of the line.
struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;

  static SExpr make_atom(std::string a) { return SExpr{true, std::move(a), {}}; }
  static SExpr make_list(std::vector<SExpr> xs) { return SExpr{false, {}, std::move(xs)}; }

  bool is(std::string_view a) const { return is_atom && atom == a; }
  std::string str() const;
};

std::vector<SExpr> parse_sexprs(std::string_view text);
/// Exactly one expression; throws Parse otherwise.
SExpr parse_sexpr(std::string_view text);

}  // namespace algoglue
