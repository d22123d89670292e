#include "ncrat/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "ncrat/error.hpp"

namespace ncrat {

namespace {

struct Token {
  enum class Kind { Integer, Ident, Plus, Minus, Star, LParen, RParen, Caret, End };
  Kind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      out.push_back({Token::Kind::Integer, std::string(src.substr(start, pos - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      out.push_back({Token::Kind::Ident, std::string(src.substr(start, pos - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
    case '+': kind = Token::Kind::Plus; break;
    case '-': kind = Token::Kind::Minus; break;
    case '*': kind = Token::Kind::Star; break;
    case '(': kind = Token::Kind::LParen; break;
    case ')': kind = Token::Kind::RParen; break;
    case '^': kind = Token::Kind::Caret; break;
    default:
      throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++pos;
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

class Cursor {
public:
  explicit Cursor(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek() const { return tokens_[index_]; }
  bool at(Token::Kind kind) const { return peek().kind == kind; }
  Token take() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
  Token expect(Token::Kind kind, const char* what) {
    if (!at(kind))
      throw SyntaxError(std::string("expected ") + what +
                            (peek().kind == Token::Kind::End ? " before end of input"
                                                             : ", found '" + peek().text + "'"),
                        peek().position);
    return take();
  }

private:
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

std::optional<unsigned> reserved_index(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix)
    return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      return std::nullopt;
  return static_cast<unsigned>(std::stoul(name.substr(1)));
}

// ---- rational expressions --------------------------------------------------

class ExprParser {
public:
  ExprParser(std::string_view src, SpecPtr spec, unsigned mu)
      : cursor_(src), spec_(std::move(spec)), mu_(mu) {}

  RationalExpr parse() {
    auto e = expr();
    if (!cursor_.at(Token::Kind::End))
      throw SyntaxError("unexpected '" + cursor_.peek().text + "'", cursor_.peek().position);
    return e;
  }

private:
  RationalExpr expr() {
    RationalExpr lhs = term();
    while (cursor_.at(Token::Kind::Plus) || cursor_.at(Token::Kind::Minus)) {
      const bool plus = cursor_.take().kind == Token::Kind::Plus;
      RationalExpr rhs = term();
      lhs = plus ? RationalExpr::add(std::move(lhs), std::move(rhs))
                 : RationalExpr::sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  RationalExpr term() {
    bool negate = false;
    if (cursor_.at(Token::Kind::Minus)) {
      cursor_.take();
      negate = true;
    }
    RationalExpr lhs = factor();
    if (negate) {
      if (lhs.kind() == RationalExpr::Kind::IntScalar)
        lhs = RationalExpr::integer(-lhs.value());
      else
        lhs = RationalExpr::mul(RationalExpr::integer(-1), std::move(lhs));
    }
    while (cursor_.at(Token::Kind::Star)) {
      cursor_.take();
      lhs = RationalExpr::mul(std::move(lhs), factor());
    }
    return lhs;
  }

  RationalExpr factor() {
    RationalExpr base = primary();
    while (cursor_.at(Token::Kind::Caret)) {
      const auto caret = cursor_.take();
      cursor_.expect(Token::Kind::Minus, "'-1' after '^'");
      const auto one = cursor_.expect(Token::Kind::Integer, "'1' after '^-'");
      if (one.text != "1")
        throw SyntaxError("only the exponent -1 is supported", caret.position);
      base = RationalExpr::inv(std::move(base));
    }
    return base;
  }

  RationalExpr primary() {
    const Token& t = cursor_.peek();
    switch (t.kind) {
    case Token::Kind::Integer:
      return RationalExpr::integer(Integer(cursor_.take().text));
    case Token::Kind::Ident: {
      const auto token = cursor_.take();
      if (auto index = reserved_index(token.text, 'x')) {
        if (*index < 1 || *index > mu_)
          throw UnknownSymbol("indeterminate " + token.text + " outside x1..x" + std::to_string(mu_) +
                              " at position " + std::to_string(token.position));
        return RationalExpr::atom(NcPolynomial::indeterminate(spec_, mu_, *index - 1));
      }
      if (!spec_->find_symbol(token.text))
        throw UnknownSymbol("'" + token.text + "' is not a symbol of " + spec_->name() +
                            " (position " + std::to_string(token.position) + ")");
      return RationalExpr::atom(NcPolynomial::constant(RingElement::symbol(spec_, token.text), mu_));
    }
    case Token::Kind::LParen: {
      cursor_.take();
      auto inner = expr();
      cursor_.expect(Token::Kind::RParen, "')'");
      return inner;
    }
    default:
      throw SyntaxError(t.kind == Token::Kind::End ? "unexpected end of input"
                                                   : "unexpected '" + t.text + "'",
                        t.position);
    }
  }

  Cursor cursor_;
  SpecPtr spec_;
  unsigned mu_;
};

// ---- group ring ------------------------------------------------------------

class GroupParser {
public:
  GroupParser(std::string_view src, SpecPtr spec, unsigned mu)
      : cursor_(src), spec_(std::move(spec)), mu_(mu) {}

  GroupRingElement parse() {
    auto e = expr();
    if (!cursor_.at(Token::Kind::End))
      throw SyntaxError("unexpected '" + cursor_.peek().text + "'", cursor_.peek().position);
    return e;
  }

private:
  GroupRingElement expr() {
    GroupRingElement lhs = term();
    while (cursor_.at(Token::Kind::Plus) || cursor_.at(Token::Kind::Minus)) {
      const bool plus = cursor_.take().kind == Token::Kind::Plus;
      auto rhs = term();
      lhs = plus ? lhs + rhs : lhs - rhs;
    }
    return lhs;
  }

  bool starts_factor() const {
    return cursor_.at(Token::Kind::Integer) || cursor_.at(Token::Kind::Ident) ||
           cursor_.at(Token::Kind::LParen);
  }

  GroupRingElement term() {
    bool negate = false;
    if (cursor_.at(Token::Kind::Minus)) {
      cursor_.take();
      negate = true;
    }
    GroupRingElement lhs = factor();
    for (;;) {
      if (cursor_.at(Token::Kind::Star)) {
        cursor_.take();
        lhs = lhs * factor();
      } else if (starts_factor()) {
        lhs = lhs * factor();
      } else {
        break;
      }
    }
    return negate ? -lhs : lhs;
  }

  GroupRingElement factor() {
    const Token t = cursor_.peek();
    switch (t.kind) {
    case Token::Kind::Integer:
      cursor_.take();
      return GroupRingElement::scalar(RingElement(spec_, Integer(t.text)), mu_);
    case Token::Kind::Ident: {
      cursor_.take();
      if (auto index = reserved_index(t.text, 'z')) {
        if (*index < 1 || *index > mu_)
          throw UnknownSymbol("group letter " + t.text + " outside z1..z" + std::to_string(mu_) +
                              " at position " + std::to_string(t.position));
        long exponent = 1;
        if (cursor_.at(Token::Kind::Caret)) {
          cursor_.take();
          long sign = 1;
          if (cursor_.at(Token::Kind::Minus)) {
            cursor_.take();
            sign = -1;
          }
          const auto k = cursor_.expect(Token::Kind::Integer, "exponent");
          exponent = sign * std::stol(k.text);
        }
        const int letter = static_cast<int>(*index) * (exponent < 0 ? -1 : 1);
        return GroupRingElement::term(RingElement(spec_, 1),
                                      GroupWord(static_cast<std::size_t>(std::labs(exponent)), letter), mu_);
      }
      if (!spec_->find_symbol(t.text))
        throw UnknownSymbol("'" + t.text + "' is not a symbol of " + spec_->name() + " (position " +
                            std::to_string(t.position) + ")");
      return GroupRingElement::scalar(RingElement::symbol(spec_, t.text), mu_);
    }
    case Token::Kind::LParen: {
      cursor_.take();
      auto inner = expr();
      cursor_.expect(Token::Kind::RParen, "')'");
      return inner;
    }
    default:
      throw SyntaxError(t.kind == Token::Kind::End ? "unexpected end of input"
                                                   : "unexpected '" + t.text + "'",
                        t.position);
    }
  }

  Cursor cursor_;
  SpecPtr spec_;
  unsigned mu_;
};

} // namespace

RationalExpr parse_expr(std::string_view src, const SpecPtr& spec, unsigned mu) {
  return ExprParser(src, spec, mu).parse();
}

GroupRingElement parse_group_ring(std::string_view src, const SpecPtr& spec, unsigned mu) {
  return GroupParser(src, spec, mu).parse();
}

} // namespace ncrat
