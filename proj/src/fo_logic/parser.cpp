#include "folab/fo_logic/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "folab/graph_core/errors.hpp"

namespace folab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::set<std::string>& free_vars)
      : text_(text), scope_(free_vars.begin(), free_vars.end()) {}

  Formula parse_all() {
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (!unbound_.empty()) {
      throw ParseError("unbound variable '" + unbound_.front().first + "'", unbound_.front().second + 1);
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string peek_identifier() {
    skip_space();
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end])) {
      while (end < text_.size() && ident_char(text_[end])) ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string binder() {
    std::string name = peek_identifier();
    if (name.empty()) fail("expected a variable name");
    if (name == "E" || name == "A" || name == "adj") fail("reserved word used as a variable");
    pos_ += name.size();
    return name;
  }

  std::string variable() {
    const std::size_t at = (skip_space(), pos_);
    std::string name = binder();
    if (std::find(scope_.begin(), scope_.end(), name) == scope_.end()) unbound_.emplace_back(name, at);
    return name;
  }

  Formula formula() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::string word = peek_identifier();
    if (word == "E" || word == "A") {
      pos_ += 1;
      std::string var = binder();
      expect(".");
      scope_.push_back(var);
      Formula body = formula();
      scope_.pop_back();
      return word == "E" ? exists(std::move(var), std::move(body)) : forall(std::move(var), std::move(body));
    }
    if (word == "adj") {
      pos_ += 3;
      expect("(");
      std::string x = variable();
      expect(",");
      std::string y = variable();
      expect(")");
      return adj(std::move(x), std::move(y));
    }
    if (!word.empty()) {
      std::string x = variable();
      expect("=");
      std::string y = variable();
      return eq(std::move(x), std::move(y));
    }
    if (accept("!")) return neg(formula());
    if (accept("(")) return group();
    fail("expected a formula");
  }

  Formula group() {
    Formula first = formula();
    if (accept(")")) return first;
    if (accept("->")) {
      Formula second = formula();
      expect(")");
      return implies(std::move(first), std::move(second));
    }
    std::vector<Formula> parts{std::move(first)};
    std::string_view sep;
    if (accept("&")) {
      sep = "&";
    } else if (accept("|")) {
      sep = "|";
    } else {
      fail("expected '&', '|', '->' or ')'");
    }
    do {
      parts.push_back(formula());
    } while (accept(sep));
    expect(")");
    return sep == "&" ? conj(std::move(parts)) : disj(std::move(parts));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  std::vector<std::pair<std::string, std::size_t>> unbound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::set<std::string>& free_vars) {
  return Parser(text, free_vars).parse_all();
}

}  // namespace folab
