#include "eddeg/parse.hpp"

#include <cctype>

#include "eddeg/errors.hpp"

namespace eddeg {

namespace {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::size_t at = i_;
    if (i_ >= s_.size()) return {Tok::end, "", at};
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      Token t{Tok::ident, s_.substr(i_, j - i_), at};
      i_ = j;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      // a/b rational literal: the slash must be glued to digits on both sides.
      if (j + 1 < s_.size() && s_[j] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
        ++j;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      }
      Token t{Tok::number, s_.substr(i_, j - i_), at};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::plus, "+", at};
      case '-': return {Tok::minus, "-", at};
      case '*': return {Tok::star, "*", at};
      case '^': return {Tok::caret, "^", at};
      case '(': return {Tok::lparen, "(", at};
      case ')': return {Tok::rparen, ")", at};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring)
      : lex_(text), ring_(std::move(ring)) {
    advance();
  }

  PolyQ parse() {
    PolyQ f = expression();
    if (cur_.kind != Tok::end)
      throw SyntaxError("trailing input '" + cur_.text + "'", cur_.pos);
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  PolyQ expression() {
    bool negate = false;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      if (cur_.kind == Tok::minus) negate = !negate;
      advance();
    }
    PolyQ acc = product();
    if (negate) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool sub = cur_.kind == Tok::minus;
      advance();
      PolyQ rhs = product();
      acc = sub ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  PolyQ product() {
    PolyQ acc = power();
    while (cur_.kind == Tok::star) {
      advance();
      acc = acc * power();
    }
    return acc;
  }

  PolyQ power() {
    PolyQ base = atom();
    if (cur_.kind != Tok::caret) return base;
    advance();
    if (cur_.kind != Tok::number)
      throw SyntaxError("exponent must be an integer literal", cur_.pos);
    const Token t = cur_;
    advance();
    if (t.text.find('/') != std::string::npos)
      throw SyntaxError("exponent must be an integer literal", t.pos);
    unsigned long e = 0;
    try {
      e = std::stoul(t.text);
    } catch (const std::exception&) {
      throw SyntaxError("exponent out of range", t.pos);
    }
    if (e > 100000) throw SyntaxError("exponent out of range", t.pos);
    return base.pow(static_cast<unsigned>(e));
  }

  PolyQ atom() {
    switch (cur_.kind) {
      case Tok::ident: {
        std::size_t idx = ring_->index_of(cur_.text);
        if (idx == Ring::npos)
          throw UnknownVariable("unknown variable '" + cur_.text + "' at position " +
                                std::to_string(cur_.pos));
        advance();
        return PolyQ::variable(ring_, idx);
      }
      case Tok::number: {
        Rational c = Rational::from_string(cur_.text);
        advance();
        return PolyQ::constant(ring_, std::move(c));
      }
      case Tok::lparen: {
        advance();
        PolyQ inner = expression();
        if (cur_.kind != Tok::rparen)
          throw SyntaxError("expected ')'", cur_.pos);
        advance();
        return inner;
      }
      default:
        throw SyntaxError("expected a variable, literal, or '('", cur_.pos);
    }
  }

  Lexer lex_;
  RingPtr ring_;
  Token cur_{Tok::end, "", 0};
};

}  // namespace

PolyQ parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

PolyQ parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_poly(text, make_ring_q(vars));
}

}  // namespace eddeg
