#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "lgm/errors.hpp"
#include "lgm/laurent.hpp"

namespace lgm::laurent {

namespace {

struct Token {
  enum Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos;
};

[[noreturn]] void fail(const std::string& what, size_t pos) {
  throw ParseError(what + " at position " + std::to_string(pos));
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back({Token::Integer, text.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back({Token::Ident, text.substr(start, i - start), start});
    } else {
      Token::Kind kind;
      switch (c) {
        case '+': kind = Token::Plus; break;
        case '-': kind = Token::Minus; break;
        case '*': kind = Token::Star; break;
        case '/': kind = Token::Slash; break;
        case '^': kind = Token::Caret; break;
        case '(': kind = Token::LParen; break;
        case ')': kind = Token::RParen; break;
        default:
          fail(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({kind, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> vars,
         bool fixed_vars)
      : tokens_(std::move(tokens)), vars_(std::move(vars)),
        fixed_vars_(fixed_vars) {
    for (size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = static_cast<int>(i);
    // Register every identifier up front so partial results already carry the
    // final variable count.
    if (!fixed_vars_)
      for (const auto& t : tokens_)
        if (t.kind == Token::Ident && !index_.count(t.text)) {
          index_[t.text] = static_cast<int>(vars_.size());
          vars_.push_back(t.text);
        }
  }

  ParsedPolynomial parse() {
    LaurentPolynomial poly = expr();
    if (peek().kind != Token::End) fail("unexpected token", peek().pos);
    return {poly, vars_};
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token next() { return tokens_[at_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  LaurentPolynomial expr() {
    bool neg = accept(Token::Minus);
    LaurentPolynomial out = term();
    if (neg) out = negate(out);
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      LaurentPolynomial rhs = term();
      out = minus ? sub(out, rhs) : add(out, rhs);
    }
    return out;
  }

  LaurentPolynomial term() {
    LaurentPolynomial out = factor();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      Token op = next();
      LaurentPolynomial rhs = factor();
      if (op.kind == Token::Star) {
        out = multiply(out, rhs);
      } else {
        if (!rhs.is_monomial())
          fail("division requires a nonzero single-monomial divisor", op.pos);
        out = multiply(out, pow(rhs, -1));
      }
    }
    return out;
  }

  LaurentPolynomial factor() {
    LaurentPolynomial base = atom();
    if (!accept(Token::Caret)) return base;
    size_t caret_pos = tokens_[at_ - 1].pos;
    bool neg = accept(Token::Minus);
    if (peek().kind != Token::Integer)
      fail("expected an integer exponent", peek().pos);
    Token e = next();
    long long u;
    try {
      u = std::stoll(e.text);
    } catch (const std::exception&) {
      fail("exponent out of range", e.pos);
    }
    if (neg) u = -u;
    if (u < 0 && !base.is_monomial())
      fail("negative power of a non-monomial", caret_pos);
    return pow(base, u);
  }

  LaurentPolynomial atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Integer: {
        next();
        return LaurentPolynomial::constant(nvars(), make_rat(Int(t.text), Int(1)));
      }
      case Token::Ident: {
        next();
        auto it = index_.find(t.text);
        if (it == index_.end()) fail("unknown variable '" + t.text + "'", t.pos);
        Exponents e(nvars(), 0);
        e[it->second] = 1;
        return LaurentPolynomial::monomial(nvars(), e, rat_ll(1));
      }
      case Token::LParen: {
        next();
        LaurentPolynomial inner = expr();
        if (!accept(Token::RParen)) fail("expected ')'", peek().pos);
        return inner;
      }
      case Token::End:
        fail("unexpected end of input", t.pos);
      default:
        fail("unexpected token", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  bool fixed_vars_;
  size_t at_ = 0;
};

}  // namespace

ParsedPolynomial parse_laurent(const std::string& text,
                               const std::vector<std::string>& var_names) {
  return Parser(tokenize(text), var_names, !var_names.empty()).parse();
}

}  // namespace lgm::laurent
