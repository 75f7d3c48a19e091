#include "premetric/form_expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "premetric/error.hpp"

namespace premetric {

namespace {

enum class Tok { Number, Var, Diff, Imag, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int index = 0;  // variable / differential index
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t{Tok::End, "", 0, line_, column_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        t.kind = Tok::Number;
        t.text = digits();
        if (peek() == '/') {
          advance();
          skip_space();
          if (pos_ >= src_.size() || std::isdigit(static_cast<unsigned char>(src_[pos_])) == 0)
            throw ParseError("expected denominator after '/'", line_, column_);
          t.text += "/" + digits();
        }
      } else if (c == 'd' && peek(1) == 'x') {
        advance();
        advance();
        t.kind = Tok::Diff;
        t.index = index_after(t);
      } else if (c == 'x') {
        advance();
        t.kind = Tok::Var;
        t.index = index_after(t);
      } else if (c == 'i' && !is_ident(peek(1))) {
        advance();
        t.kind = Tok::Imag;
      } else {
        advance();
        switch (c) {
          case '+': t.kind = Tok::Plus; break;
          case '-': t.kind = Tok::Minus; break;
          case '*': t.kind = Tok::Star; break;
          case '^': t.kind = Tok::Caret; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
        }
      }
      out.push_back(t);
    }
  }

 private:
  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) advance();
  }

  std::string digits() {
    std::string s;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
      s += src_[pos_];
      advance();
    }
    return s;
  }

  int index_after(const Token& t) {
    if (std::isdigit(static_cast<unsigned char>(peek())) == 0)
      throw ParseError("expected coordinate index", line_, column_);
    std::string d = digits();
    if (d.size() > 2) throw ParseError("coordinate index out of range", t.line, t.column);
    return std::stoi(d);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Recursive descent. A term is a signed product of coefficient factors,
// optionally ending in a wedge of differentials.
class Parser {
 public:
  Parser(std::vector<Token> tokens, const Chart& chart) : toks_(std::move(tokens)), chart_(chart) {}

  Form expression(int expected_degree, Twist twist) {
    Form out(chart_, expected_degree, twist);
    bool negate = false;
    if (at(Tok::Minus)) {
      next();
      negate = true;
    } else if (at(Tok::Plus)) {
      next();
    }
    while (true) {
      const Token& start = cur();
      auto [coeff, basis] = term();
      int degree = basis ? static_cast<int>(basis->size()) : 0;
      // A bare zero coefficient is the zero form of any degree.
      if (!basis && coeff.is_zero()) degree = expected_degree;
      if (degree != expected_degree)
        throw ParseError("term has degree " + std::to_string(degree) + ", expected " +
                             std::to_string(expected_degree),
                         start.line, start.column);
      if (basis || !coeff.is_zero()) {
        Form piece = basis ? Form::basis(chart_, *basis, twist) : Form::scalar(chart_, chart_.constant(Scalar(1)), twist);
        out += form_scale(piece, negate ? -coeff : coeff);
      }
      if (at(Tok::Plus)) {
        next();
        negate = false;
      } else if (at(Tok::Minus)) {
        next();
        negate = true;
      } else {
        break;
      }
    }
    expect_end();
    return out;
  }

  Polynomial polynomial_only() {
    Polynomial p = sum();
    expect_end();
    return p;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur().line, cur().column); }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    next();
  }

  void expect_end() {
    if (at(Tok::Diff)) fail("differential must follow '*' at the end of a term");
    if (!at(Tok::End)) fail("unexpected token");
  }

  std::pair<Polynomial, std::optional<std::vector<int>>> term() {
    if (at(Tok::Diff)) return {chart_.constant(Scalar(1)), basis()};
    Polynomial c = factor();
    while (at(Tok::Star)) {
      next();
      if (at(Tok::Diff)) return {c, basis()};
      c = c * factor();
    }
    if (at(Tok::Diff)) fail("missing '*' before differential");
    return {c, std::nullopt};
  }

  std::vector<int> basis() {
    std::vector<int> idx;
    while (true) {
      const Token& t = cur();
      if (t.kind != Tok::Diff) fail("expected differential 'dx<k>'");
      if (t.index >= chart_.n) throw ParseError("index out of range: dx" + std::to_string(t.index), t.line, t.column);
      idx.push_back(t.index);
      next();
      if (!at(Tok::Caret)) break;
      next();
    }
    if (at(Tok::Star)) fail("differentials must be the last factor of a term");
    return idx;
  }

  // sum inside parentheses, or for polynomial-only parsing.
  Polynomial sum() {
    Polynomial p = signed_product();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool minus = next().kind == Tok::Minus;
      Polynomial q = signed_product();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  Polynomial signed_product() {
    bool minus = false;
    if (at(Tok::Minus) || at(Tok::Plus)) minus = next().kind == Tok::Minus;
    Polynomial p = factor();
    while (at(Tok::Star)) {
      next();
      if (at(Tok::Diff)) fail("differentials are not allowed inside a coefficient");
      p = p * factor();
    }
    return minus ? -p : p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (at(Tok::Caret)) {
      next();
      const Token& t = cur();
      if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
        fail("exponent must be a nonnegative integer");
      if (t.text.size() > 3) fail("exponent too large");
      next();
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Rational q(t.text);
        q.canonicalize();
        return chart_.constant(Scalar(q));
      }
      case Tok::Var:
        if (t.index >= chart_.n) throw ParseError("index out of range: x" + std::to_string(t.index), t.line, t.column);
        next();
        return chart_.x(t.index);
      case Tok::Imag:
        if (chart_.mode != ScalarMode::Complex) fail("imaginary unit on a real-mode chart");
        next();
        return chart_.constant(Scalar::i());
      case Tok::LParen: {
        next();
        Polynomial p = sum();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::Minus:
        fail("unexpected '-'; parenthesize signed factors");
      case Tok::Diff:
        fail("differential not allowed here");
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected token");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

}  // namespace

Form parse_form(std::string_view text, const Chart& chart, int expected_degree, Twist twist) {
  if (expected_degree < 0 || expected_degree > chart.n)
    throw DomainError("expected degree out of range for the chart");
  Parser parser(Lexer(text).run(), chart);
  return parser.expression(expected_degree, twist);
}

Polynomial parse_polynomial(std::string_view text, const Chart& chart) {
  Parser parser(Lexer(text).run(), chart);
  return parser.polynomial_only();
}

}  // namespace premetric
