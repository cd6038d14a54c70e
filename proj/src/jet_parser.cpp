#include "scalelab/jet_parser.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "scalelab/error.hpp"

namespace scalelab {

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, sep, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

[[noreturn]] void fail(int line, int column, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char ch = src[i];
    const int start_col = col;
    if (ch == '\n') {
      out.push_back({Tok::sep, "\n", line, col});
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
        ++j;
      }
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ';': kind = Tok::sep; break;
      default: fail(line, col, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), line, start_col});
    ++i;
    ++col;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

Rational parse_number(const Token& tok) {
  const auto dot = tok.text.find('.');
  if (dot != std::string::npos && tok.text.find('.', dot + 1) != std::string::npos) {
    fail(tok.line, tok.column, "malformed number '" + tok.text + "'");
  }
  std::string digits = tok.text;
  std::int64_t den = 1;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    for (std::size_t k = dot; k < tok.text.size() - 1; ++k) den *= 10;
  }
  if (digits.empty()) fail(tok.line, tok.column, "malformed number '" + tok.text + "'");
  if (digits.size() > 17) fail(tok.line, tok.column, "number too long '" + tok.text + "'");
  return Rational(std::stoll(digits), den);
}

struct JetUse {
  JetIndex index;
  int line;
  int column;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, int n, bool allow_eta)
      : toks_(std::move(toks)), n_(n), allow_eta_(allow_eta) {}

  JetExpr program() {
    std::vector<Polynomial> comps;
    while (true) {
      while (peek().kind == Tok::sep) ++pos_;
      if (peek().kind == Tok::end) break;
      comps.push_back(sum());
      const Token& t = peek();
      if (t.kind != Tok::sep && t.kind != Tok::end) {
        if (t.kind == Tok::rparen) fail(t.line, t.column, "unbalanced parenthesis ')'");
        fail(t.line, t.column, "unexpected '" + t.text + "'");
      }
    }
    if (comps.empty()) fail(peek().line, peek().column, "empty expression");
    const int N = static_cast<int>(comps.size());
    for (const auto& use : uses_) {
      if (use.index.component >= N) {
        fail(use.line, use.column,
             "unknown identifier '" + to_string(use.index) + "' (only u1..u" + std::to_string(N) +
                 " exist for " + std::to_string(N) + " component(s))");
      }
    }
    return JetExpr{n_, N, std::move(comps)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Polynomial sum() {
    Polynomial acc = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Polynomial rhs = product();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token& op = next();
      Polynomial rhs = unary();
      if (op.kind == Tok::star) {
        acc = acc * rhs;
        continue;
      }
      if (rhs.degree() > 0) fail(op.line, op.column, "division by a non-constant expression");
      if (rhs.is_zero()) fail(op.line, op.column, "division by zero");
      acc *= Rational(1) / rhs.terms().begin()->second;
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::minus) {
      ++pos_;
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != Tok::caret) return base;
    ++pos_;
    const Token& e = next();
    if (e.kind != Tok::number || e.text.find('.') != std::string::npos) {
      fail(e.line, e.column, "exponent must be a non-negative integer");
    }
    const long exponent = std::stol(e.text);
    if (exponent > 16) fail(e.line, e.column, "exponent too large");
    Polynomial out = Polynomial::constant(Rational(1));
    for (long k = 0; k < exponent; ++k) out = out * base;
    return out;
  }

  Polynomial primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number: return Polynomial::constant(parse_number(t));
      case Tok::ident: return Polynomial::variable(jet(t));
      case Tok::lparen: {
        Polynomial inner = sum();
        const Token& close = peek();
        if (close.kind != Tok::rparen) {
          fail(close.line, close.column, "expected ')' (unbalanced parenthesis)");
        }
        ++pos_;
        return inner;
      }
      case Tok::end: fail(t.line, t.column, "unexpected end of input");
      case Tok::sep: fail(t.line, t.column, "unexpected end of statement");
      default: fail(t.line, t.column, "unexpected '" + t.text + "'");
    }
  }

  JetIndex jet(const Token& t) {
    const std::string& s = t.text;
    auto unknown = [&] { fail(t.line, t.column, "unknown identifier '" + s + "'"); };
    if (s.size() < 2 || s[0] != 'u' || !std::isdigit(static_cast<unsigned char>(s[1]))) unknown();
    std::size_t i = 1;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    const int comp = std::stoi(s.substr(1, i - 1));
    if (comp < 1) unknown();
    JetIndex j{comp - 1, {}};
    if (i == s.size()) return record(j, t);
    if (s[i] != '_' || i + 1 == s.size()) unknown();
    ++i;
    while (i < s.size()) {
      if (s.compare(i, 3, "eta") == 0) {
        if (!allow_eta_) {
          fail(t.line, t.column,
               "'" + s + "': core functions may not depend on eta-derivatives");
        }
        j = j.with(Coord::eta);
        i += 3;
      } else if (s[i] == 't') {
        j = j.with(Coord::t);
        ++i;
      } else if (s[i] == 'x') {
        std::size_t k = i + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i + 1) unknown();
        const int axis = std::stoi(s.substr(i + 1, k - i - 1));
        if (axis < 1 || axis > n_) {
          fail(t.line, t.column,
               "'" + s + "': spatial label x" + std::to_string(axis) + " outside dimension " +
                   std::to_string(n_));
        }
        j = j.with(spatial(axis - 1));
        i = k;
      } else {
        unknown();
      }
    }
    return record(j, t);
  }

  JetIndex record(const JetIndex& j, const Token& t) {
    uses_.push_back({j, t.line, t.column});
    return j;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_;
  bool allow_eta_;
  std::vector<JetUse> uses_;
};

}  // namespace

JetExpr parse_expr(std::string_view text, int n, bool allow_eta) {
  if (n != 1 && n != 2) throw ValidationError("expression dimension must be 1 or 2");
  return Parser(lex(text), n, allow_eta).program();
}

JetExpr parse_core(std::string_view text, int n) { return parse_expr(text, n, false); }

}  // namespace scalelab
