#include "algoglue/sexpr.hpp"

#include <cctype>

#include "algoglue/error.hpp"

namespace algoglue {

std::string SExpr::str() const {
  if (is_atom) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].str();
  }
  return out + ")";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw Error(Errc::Parse, "unexpected end of s-expression");
    char c = text_[pos_];
    if (c == ')') throw Error(Errc::Parse, "unbalanced ')' at offset " + std::to_string(pos_));
    if (c == '(') {
      ++pos_;
      std::vector<SExpr> items;
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw Error(Errc::Parse, "missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return SExpr::make_list(std::move(items));
        }
        items.push_back(read());
      }
    }
    auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
      ++pos_;
    return SExpr::make_atom(std::string(text_.substr(start, pos_ - start)));
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

SExpr parse_sexpr(std::string_view text) {
  auto all = parse_sexprs(text);
  if (all.size() != 1)
    throw Error(Errc::Parse, "expected one s-expression, found " + std::to_string(all.size()));
  return all.front();
}

}  // namespace algoglue
