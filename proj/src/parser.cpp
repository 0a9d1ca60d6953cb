#include "conatus/parser.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "conatus/errors.hpp"

namespace conatus {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out;
}

enum class Tok { LParen, RParen, Not, And, Or, Arrow, Ident, True, False, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // 1-based position of the first character
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    const std::size_t pos = i_ + 1;
    if (i_ >= text_.size()) {
      current_ = {Tok::End, "end of input", pos};
      return;
    }
    const char c = text_[i_];
    switch (c) {
      case '(':
        ++i_;
        current_ = {Tok::LParen, "(", pos};
        return;
      case ')':
        ++i_;
        current_ = {Tok::RParen, ")", pos};
        return;
      case '!':
        ++i_;
        current_ = {Tok::Not, "!", pos};
        return;
      case '&':
        ++i_;
        current_ = {Tok::And, "&", pos};
        return;
      case '|':
        ++i_;
        current_ = {Tok::Or, "|", pos};
        return;
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
          i_ += 2;
          current_ = {Tok::Arrow, "->", pos};
          return;
        }
        throw ParseError(pos, std::string(1, c), {"->"});
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
        ++j;
      }
      std::string word(text_.substr(i_, j - i_));
      i_ = j;
      if (word == "true") {
        current_ = {Tok::True, std::move(word), pos};
      } else if (word == "false") {
        current_ = {Tok::False, std::move(word), pos};
      } else {
        current_ = {Tok::Ident, std::move(word), pos};
      }
      return;
    }
    throw ParseError(pos, std::string(1, c),
                     {"(", "!", "identifier", "'true'", "'false'"});
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  Token current_;
};

// formula     := implication
// implication := disjunction ( "->" implication )?
// disjunction := conjunction ( "|" conjunction )*
// conjunction := unary ( "&" unary )*
// unary       := "!" unary | primary
// primary     := "true" | "false" | identifier | "(" formula ")"
class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = implication();
    if (lex_.current().kind != Tok::End) {
      fail({"&", "|", "->", "end of input"});
    }
    return f;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(lex_.current().pos, lex_.current().text, std::move(expected));
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (lex_.current().kind == Tok::Arrow) {
      lex_.advance();
      return Formula::implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lex_.current().kind == Tok::Or) {
      lex_.advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (lex_.current().kind == Tok::And) {
      lex_.advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (lex_.current().kind == Tok::Not) {
      lex_.advance();
      return Formula::negate(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (lex_.current().kind) {
      case Tok::True:
        lex_.advance();
        return Formula::constant(true);
      case Tok::False:
        lex_.advance();
        return Formula::constant(false);
      case Tok::Ident: {
        Formula f = Formula::atom(lex_.current().text);
        lex_.advance();
        return f;
      }
      case Tok::LParen: {
        lex_.advance();
        Formula f = implication();
        if (lex_.current().kind != Tok::RParen) {
          fail({")", "&", "|", "->"});
        }
        lex_.advance();
        return f;
      }
      default:
        fail({"(", "!", "identifier", "'true'", "'false'"});
    }
  }

  Lexer lex_;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::string found,
                       std::vector<std::string> expected)
    : Error("syntax error at position " + std::to_string(position) + ": unexpected '" +
            found + "', expected one of: " + join(expected)),
      position_(position),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace conatus
