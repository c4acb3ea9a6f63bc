#include <cctype>
#include <optional>
#include <string>

#include "dnaprover/error.hpp"
#include "dnaprover/logic.hpp"

namespace dnaprover {
namespace {

enum class Tok { kIdent, kNot, kAnd, kOr, kImplies, kImpliedBy, kIff, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNot: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImplies: return "'->'";
    case Tok::kImpliedBy: return "'<-'";
    case Tok::kIff: return "'<->'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::kEnd, "", start};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return {Tok::kIdent, std::string(text_.substr(start, pos_ - start)), start};
    }
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    if (starts("<->")) return advance(Tok::kIff, 3);
    if (starts("<-")) return advance(Tok::kImpliedBy, 2);
    if (starts("->")) return advance(Tok::kImplies, 2);
    switch (c) {
      case '~': return advance(Tok::kNot, 1);
      case '&': return advance(Tok::kAnd, 1);
      case '|': return advance(Tok::kOr, 1);
      case '(': return advance(Tok::kLParen, 1);
      case ')': return advance(Tok::kRParen, 1);
      default: break;
    }
    throw ParseError(std::string("unknown token '") + c + "'", start);
  }

 private:
  Token advance(Tok kind, std::size_t n) {
    Token t{kind, std::string(text_.substr(pos_, n)), pos_};
    pos_ += n;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  Formula parse() {
    Formula f = arrow();
    expect(Tok::kEnd);
    return f;
  }

 private:
  Formula arrow() {
    Formula lhs = disjunction();
    if (!is_arrow(current_.kind)) return lhs;
    const Tok op = current_.kind;
    consume();
    Formula rhs = disjunction();
    if (is_arrow(current_.kind))
      throw ParseError("chained arrows need parentheses", current_.pos);
    switch (op) {
      case Tok::kImplies: return Formula::implies(lhs, rhs);
      case Tok::kImpliedBy: return Formula::implied_by(lhs, rhs);
      default: return Formula::iff(lhs, rhs);
    }
  }

  Formula disjunction() {
    std::vector<Formula> ops{conjunction()};
    while (current_.kind == Tok::kOr) {
      consume();
      ops.push_back(conjunction());
    }
    return ops.size() == 1 ? ops.front() : Formula::disjunction(std::move(ops));
  }

  Formula conjunction() {
    std::vector<Formula> ops{unary()};
    while (current_.kind == Tok::kAnd) {
      consume();
      ops.push_back(unary());
    }
    return ops.size() == 1 ? ops.front() : Formula::conjunction(std::move(ops));
  }

  Formula unary() {
    switch (current_.kind) {
      case Tok::kNot:
        consume();
        return Formula::negation(unary());
      case Tok::kIdent: {
        std::string name = current_.text;
        consume();
        return Formula::var(std::move(name));
      }
      case Tok::kLParen: {
        consume();
        Formula inner = arrow();
        expect(Tok::kRParen);
        return inner;
      }
      default:
        throw ParseError(std::string("unexpected ") + describe(current_.kind), current_.pos);
    }
  }

  static bool is_arrow(Tok t) {
    return t == Tok::kImplies || t == Tok::kImpliedBy || t == Tok::kIff;
  }

  void consume() { current_ = lexer_.next(); }

  void expect(Tok kind) {
    if (current_.kind != kind)
      throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                           describe(current_.kind),
                       current_.pos);
    consume();
  }

  Lexer lexer_;
  Token current_{};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace dnaprover
