#include "algoglue/value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "algoglue/error.hpp"

namespace algoglue {

std::uint64_t Value::as_nat() const {
  if (!is_nat()) throw Error(Errc::ArityMismatch, "expected a natural, got " + str());
  return std::get<0>(data_);
}

const Value::List& Value::as_list() const {
  if (!is_list()) throw Error(Errc::ArityMismatch, "expected a list, got " + str());
  return std::get<1>(data_);
}

const Value::Tuple& Value::as_tuple() const {
  if (!is_tuple()) throw Error(Errc::ArityMismatch, "expected a tuple, got " + str());
  return std::get<2>(data_);
}

std::string Value::str() const {
  if (is_nat()) return std::to_string(std::get<0>(data_));
  std::string out;
  if (is_list()) {
    out = "[";
    const auto& items = std::get<1>(data_);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(items[i]);
    }
    return out + "]";
  }
  out = "(";
  const auto& items = std::get<2>(data_);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i].str();
  }
  return out + ")";
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[' || c == '(' || c == '{') ++depth;
    if (c == ']' || c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  auto last = trim(text.substr(start));
  if (!last.empty() || !parts.empty()) parts.push_back(last);
  return parts;
}

namespace {

std::uint64_t parse_nat(std::string_view s) {
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::Parse, "not a natural number: '" + std::string(s) + "'");
  return n;
}

}  // namespace

Value parse_value(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw Error(Errc::Parse, "empty value literal");
  if (t.front() == '[') {
    if (t.back() != ']') throw Error(Errc::Parse, "unterminated list: " + t);
    Value::List items;
    for (const auto& p : split_top_level(std::string_view(t).substr(1, t.size() - 2), ','))
      items.push_back(parse_nat(p));
    return Value::list(std::move(items));
  }
  if (t.front() == '(') {
    if (t.back() != ')') throw Error(Errc::Parse, "unterminated tuple: " + t);
    Value::Tuple items;
    for (const auto& p : split_top_level(std::string_view(t).substr(1, t.size() - 2), ','))
      items.push_back(parse_value(p));
    return Value::tuple(std::move(items));
  }
  return Value::nat(parse_nat(t));
}

Environment::Environment(std::initializer_list<std::pair<std::string, Value>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

bool Environment::has(std::string_view var) const {
  return std::any_of(bindings_.begin(), bindings_.end(),
                     [&](const auto& b) { return b.first == var; });
}

const Value& Environment::get(std::string_view var) const {
  for (const auto& b : bindings_)
    if (b.first == var) return b.second;
  throw Error(Errc::UnknownVariable, std::string(var));
}

void Environment::set(std::string_view var, Value v) {
  for (auto& b : bindings_) {
    if (b.first == var) {
      b.second = std::move(v);
      return;
    }
  }
  bindings_.emplace_back(std::string(var), std::move(v));
}

std::string Environment::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i) out += ", ";
    out += bindings_[i].first + ": " + bindings_[i].second.str();
  }
  return out + "}";
}

Environment parse_environment(std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error(Errc::Parse, "environment literal must be braced: " + t);
  Environment env;
  for (const auto& item : split_top_level(std::string_view(t).substr(1, t.size() - 2), ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "missing ':' in '" + item + "'");
    auto name = trim(std::string_view(item).substr(0, colon));
    if (name.empty()) throw Error(Errc::Parse, "empty variable name in '" + item + "'");
    if (env.has(name)) throw Error(Errc::Parse, "duplicate variable '" + name + "'");
    env.set(name, parse_value(std::string_view(item).substr(colon + 1)));
  }
  return env;
}

}  // namespace algoglue
