#include "algoglue/model.hpp"

#include <algorithm>

#include "algoglue/error.hpp"

namespace algoglue {

namespace {

bool valid_symbol(char c) { return c == '0' || c == '1' || c == Tape::kBlank; }

}  // namespace

Tape::Tape(std::string window, std::int64_t origin) : window_(std::move(window)), origin_(origin) {
  for (char c : window_)
    if (!valid_symbol(c)) throw Error(Errc::Parse, std::string("invalid tape symbol '") + c + "'");
  normalize();
}

void Tape::normalize() {
  auto first = window_.find_first_not_of(kBlank);
  if (first == std::string::npos) {
    window_.clear();
    origin_ = 0;
    return;
  }
  auto last = window_.find_last_not_of(kBlank);
  window_ = window_.substr(first, last - first + 1);
  origin_ -= static_cast<std::int64_t>(first);
}

Tape Tape::from_cells(std::span<const std::pair<std::int64_t, char>> cells) {
  Tape t;
  for (const auto& [pos, sym] : cells) t = t.with(pos, sym);
  return t;
}

char Tape::at(std::int64_t position) const {
  auto idx = origin_ + position;
  if (idx < 0 || idx >= static_cast<std::int64_t>(window_.size())) return kBlank;
  return window_[static_cast<std::size_t>(idx)];
}

Tape Tape::with(std::int64_t position, char symbol) const {
  if (!valid_symbol(symbol)) throw Error(Errc::Parse, std::string("invalid tape symbol '") + symbol + "'");
  if (at(position) == symbol) return *this;
  Tape t = *this;
  if (t.window_.empty()) {
    t.window_ = std::string(1, symbol);
    t.origin_ = -position;
    t.normalize();
    return t;
  }
  auto idx = t.origin_ + position;
  if (idx < 0) {
    t.window_.insert(0, static_cast<std::size_t>(-idx), kBlank);
    t.origin_ -= idx;
    idx = 0;
  } else if (idx >= static_cast<std::int64_t>(t.window_.size())) {
    t.window_.resize(static_cast<std::size_t>(idx) + 1, kBlank);
  }
  t.window_[static_cast<std::size_t>(idx)] = symbol;
  t.normalize();
  return t;
}

Tape Tape::shifted_right() const {
  Tape t = *this;
  if (!t.window_.empty()) t.origin_ -= 1;
  return t;
}

Tape Tape::shifted_left() const {
  Tape t = *this;
  if (!t.window_.empty()) t.origin_ += 1;
  return t;
}

std::string Tape::str() const {
  if (window_.empty()) return std::string(1, kBlank);
  auto n = static_cast<std::int64_t>(window_.size());
  auto lo = std::min<std::int64_t>(0, origin_);
  auto hi = std::max<std::int64_t>(n - 1, origin_);
  std::string out;
  for (auto i = lo; i <= hi; ++i) {
    if (i == origin_ && origin_ > lo) out += '^';
    out += (i >= 0 && i < n) ? window_[static_cast<std::size_t>(i)] : kBlank;
  }
  return out;
}

Tape parse_tape(std::string_view literal) {
  std::string cells;
  std::int64_t origin = 0;
  bool caret = false;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    char c = literal[i];
    if (c == '^') {
      if (caret) throw Error(Errc::Parse, "tape literal has more than one '^'");
      caret = true;
      origin = static_cast<std::int64_t>(cells.size());
      continue;
    }
    if (!valid_symbol(c)) throw Error(Errc::Parse, "invalid tape literal '" + std::string(literal) + "'");
    cells += c;
  }
  if (caret && origin == static_cast<std::int64_t>(cells.size()))
    throw Error(Errc::Parse, "'^' must precede a cell in '" + std::string(literal) + "'");
  return Tape(cells, origin);
}

std::string config_str(const Config& c) {
  if (const auto* t = std::get_if<Tape>(&c)) return t->str();
  return std::get<Environment>(c).str();
}

bool operator==(const Config& a, const Config& b) {
  if (a.index() != b.index()) return false;
  if (a.index() == 0) return std::get<Tape>(a) == std::get<Tape>(b);
  return std::get<Environment>(a) == std::get<Environment>(b);
}

ModelOfComputation::ModelOfComputation(std::string name, std::string space)
    : name_(std::move(name)), space_(std::move(space)) {}

void ModelOfComputation::add_instruction(std::string symbol, PartialMap semantics) {
  if (semantics_.count(symbol))
    throw Error(Errc::ConventionViolation, "duplicate instruction '" + symbol + "' in model " + name_);
  order_.push_back(symbol);
  semantics_.emplace(std::move(symbol), std::move(semantics));
}

void ModelOfComputation::declare_disjoint(const std::string& a, const std::string& b) {
  disjoint_.emplace_back(a, b);
}

bool ModelOfComputation::has(std::string_view symbol) const {
  return semantics_.find(symbol) != semantics_.end();
}

bool ModelOfComputation::disjoint(const std::string& a, const std::string& b) const {
  return std::any_of(disjoint_.begin(), disjoint_.end(), [&](const auto& p) {
    return (p.first == a && p.second == b) || (p.first == b && p.second == a);
  });
}

std::optional<Config> ModelOfComputation::apply(std::string_view symbol, const Config& x) const {
  auto it = semantics_.find(symbol);
  if (it == semantics_.end())
    throw Error(Errc::UnknownInstruction, "'" + std::string(symbol) + "' is not an instruction of " + name_);
  return it->second(x);
}

std::optional<Config> ModelOfComputation::apply_word(std::span<const std::string> word,
                                                     const Config& x) const {
  for (const auto& s : word)
    if (!has(s)) throw Error(Errc::UnknownInstruction, "'" + s + "' is not an instruction of " + name_);
  std::optional<Config> cur = x;
  for (const auto& s : word) {
    cur = apply(s, *cur);
    if (!cur) return std::nullopt;
  }
  return cur;
}

namespace tm {
std::string write(char symbol) { return std::string("write_") + symbol; }
std::string read(char symbol) { return std::string("read_") + symbol; }
}  // namespace tm

namespace {

const Tape& as_tape(const Config& c) {
  if (const auto* t = std::get_if<Tape>(&c)) return *t;
  throw Error(Errc::ArityMismatch, "tm instruction applied to a non-tape configuration");
}

ModelOfComputation build_tm_model() {
  ModelOfComputation m("tm", "tape");
  m.add_instruction(std::string(tm::kRight),
                    [](const Config& c) -> std::optional<Config> { return as_tape(c).shifted_right(); });
  m.add_instruction(std::string(tm::kLeft),
                    [](const Config& c) -> std::optional<Config> { return as_tape(c).shifted_left(); });
  const char symbols[] = {'0', '1', Tape::kBlank};
  for (char s : symbols) {
    m.add_instruction(tm::write(s),
                      [s](const Config& c) -> std::optional<Config> { return as_tape(c).with(0, s); });
  }
  for (char s : symbols) {
    m.add_instruction(tm::read(s), [s](const Config& c) -> std::optional<Config> {
      if (as_tape(c).at(0) != s) return std::nullopt;
      return c;
    });
  }
  for (char a : symbols)
    for (char b : symbols)
      if (a < b) m.declare_disjoint(tm::read(a), tm::read(b));
  return m;
}

}  // namespace

const ModelOfComputation& tm_model() {
  static const ModelOfComputation model = build_tm_model();
  return model;
}

}  // namespace algoglue
