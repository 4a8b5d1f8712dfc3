#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace algoglue {

/// A carrier element of one of the shipped data domains: a natural number
/// (also used for booleans and GF(2) polynomial bitmasks), a list of naturals,
/// or a tuple of values (product carriers).
class Value {
 public:
  using List = std::vector<std::uint64_t>;
  using Tuple = std::vector<Value>;

  Value() : data_(std::uint64_t{0}) {}
  static Value nat(std::uint64_t n) { return Value(Data(n)); }
  static Value list(List items) { return Value(Data(std::move(items))); }
  static Value tuple(Tuple items) { return Value(Data(std::move(items))); }

  bool is_nat() const { return data_.index() == 0; }
  bool is_list() const { return data_.index() == 1; }
  bool is_tuple() const { return data_.index() == 2; }

  std::uint64_t as_nat() const;
  const List& as_list() const;
  const Tuple& as_tuple() const;

  /// Generic textual form: `12`, `[1,2,3]`, `(1,5)`.
  std::string str() const;

  friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) { return a.data_ < b.data_; }

 private:
  using Data = std::variant<std::uint64_t, List, Tuple>;
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

/// Parses the generic textual form produced by Value::str().
Value parse_value(std::string_view text);

/// An ordered variable store. Variable names are unique.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<std::string, Value>> init);

  bool has(std::string_view var) const;
  const Value& get(std::string_view var) const;  // throws UnknownVariable
  void set(std::string_view var, Value v);       // inserts at the end if absent

  const std::vector<std::pair<std::string, Value>>& bindings() const { return bindings_; }
  std::size_t size() const { return bindings_.size(); }

  /// `{x: 12, y: 8}`
  std::string str() const;

  friend bool operator==(const Environment& a, const Environment& b) {
    return a.bindings_ == b.bindings_;
  }

 private:
  std::vector<std::pair<std::string, Value>> bindings_;
};

/// Parses an environment literal `{x: 12, y: [1,2]}` with generic values.
Environment parse_environment(std::string_view text);

/// Splits `text` at top-level occurrences of `sep` (ignoring separators nested
/// in brackets or parentheses) and trims whitespace from each piece.
std::vector<std::string> split_top_level(std::string_view text, char sep);
std::string trim(std::string_view s);

}  // namespace algoglue
