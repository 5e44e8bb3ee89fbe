#include "symlab/parse.hpp"

#include <cctype>

namespace symlab {

ParseError::ParseError(const std::string& what, int line, int column)
    : InputError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::end, std::string(1, c), line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::number;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::name;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    switch (c) {
      case '+': t.kind = Tok::plus; break;
      case '-': t.kind = Tok::minus; break;
      case '*': t.kind = Tok::star; break;
      case '/': t.kind = Tok::slash; break;
      case '^': t.kind = Tok::caret; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      default: throw ParseError("unexpected character '" + t.text + "'", line, col);
    }
    advance(1);
    out.push_back(t);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const Field& field, const SymbolList& symbols)
      : toks_(tokenize(src)), field_(field), symbols_(symbols) {}

  RationalFunction parse() {
    if (peek().kind == Tok::end) fail("empty expression");
    RationalFunction r = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  RationalFunction constant(const FieldElement& c) const {
    return RationalFunction::constant(field_, symbols_, c);
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      RationalFunction rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  bool starts_atom() const {
    const Tok k = peek().kind;
    return k == Tok::number || k == Tok::name || k == Tok::lparen;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (peek().kind == Tok::star) {
        take();
        acc = acc * unary();
      } else if (peek().kind == Tok::slash) {
        const Token& at = take();
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at.line, at.column);
        acc = acc / d;
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek().kind == Tok::caret) {
      take();
      if (peek().kind != Tok::number) fail("expected a non-negative integer exponent");
      const Token& e = take();
      if (e.text.size() > 6) throw ParseError("exponent too large", e.line, e.column);
      return base.pow(std::stol(e.text));
    }
    return base;
  }

  RationalFunction atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        return constant(field_.from_rational(mpq_class(mpz_class(t.text))));
      }
      case Tok::name: {
        take();
        if (symbols_.find(t.text)) return RationalFunction::variable(field_, symbols_, t.text);
        if (field_.kind() == FieldKind::extension && t.text == field_.generator_name())
          return constant(field_.generator());
        throw ParseError("unknown symbol '" + t.text + "'", t.line, t.column);
      }
      case Tok::lparen: {
        take();
        RationalFunction r = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        take();
        return r;
      }
      default:
        if (t.kind == Tok::end) fail("unexpected end of input");
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Field field_;
  SymbolList symbols_;
};

}  // namespace

RationalFunction parse_ratfunc(std::string_view src, const Field& field, const SymbolList& symbols) {
  return Parser(src, field, symbols).parse();
}

UniPoly<FieldElement> parse_unipoly(std::string_view src, const Field& field, const std::string& var) {
  constexpr std::string_view tag = "factored:";
  if (src.substr(0, tag.size()) == tag) src.remove_prefix(tag.size());
  const SymbolList syms{var};
  RationalFunction r = parse_ratfunc(src, field, syms);
  if (!r.is_polynomial()) throw InputError("'" + std::string(src) + "' is not a polynomial in " + var);
  const FieldElement dinv = r.denominator().constant_term().inverse();
  const MultiPoly& n = r.numerator();
  std::vector<FieldElement> c;
  for (int k = 0; k <= n.degree_in(0); ++k) {
    MultiPoly ck = n.coefficient_in(0, k);
    c.push_back(ck.constant_term() * dinv);
  }
  return UniPoly<FieldElement>(std::move(c), field.zero());
}

FieldElement parse_scalar(std::string_view src, const Field& field) {
  RationalFunction r = parse_ratfunc(src, field, SymbolList{});
  return r.constant_value();
}

std::vector<std::string> split_top_level(std::string_view src, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t\n");
    const auto e = cur.find_last_not_of(" \t\n");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : src) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace symlab
