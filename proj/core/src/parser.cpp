#include <cctype>
#include <cmath>
#include <optional>
#include <string>

#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"

namespace ineqcert {

namespace {

enum class Tok { kNumber, kIdent, kSymbol, kRelation, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t offset = 0;
  Rational number;
};

const std::vector<std::string> kOperandStart = {"number", "identifier", "(", "-"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return number(t);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      t.kind = Tok::kIdent;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (c == '<' || c == '>') {
      t.kind = Tok::kRelation;
      t.text = std::string(1, c);
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '=') {
        t.text += '=';
        ++pos_;
      }
      return t;
    }
    // UTF-8 "≤" / "≥"
    if (text_.substr(pos_, 3) == "\xE2\x89\xA4" || text_.substr(pos_, 3) == "\xE2\x89\xA5") {
      t.kind = Tok::kRelation;
      t.text = text_[pos_ + 2] == '\xA4' ? "<=" : ">=";
      pos_ += 3;
      return t;
    }
    static const std::string symbols = "+-*/^()[]{},";
    if (symbols.find(c) != std::string::npos) {
      t.kind = Tok::kSymbol;
      t.text = std::string(1, c);
      ++pos_;
      return t;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_, kOperandStart);
  }

  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

  bool after_power_or_division(std::size_t start) const {
    std::size_t p = start;
    auto prev = [&]() -> char {
      while (p > 0 && std::isspace(static_cast<unsigned char>(text_[p - 1]))) --p;
      return p > 0 ? text_[--p] : '\0';
    };
    char c = prev();
    if (c == '-' || c == '+') c = prev();
    return c == '^' || c == '/';
  }

  Token number(Token t) {
    const std::size_t start = pos_;
    std::string int_part;
    std::string frac_part;
    while (pos_ < text_.size() && is_digit(text_[pos_])) int_part += text_[pos_++];
    // Rational literal p/q: no spaces, not the base of a power, and not the
    // right operand of ^ or / (so 2^1/3 is (2^1)/3 and 1/2/3 is (1/2)/3).
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1]) && !int_part.empty() &&
        !after_power_or_division(start)) {
      std::size_t p = pos_ + 1;
      std::string den;
      while (p < text_.size() && is_digit(text_[p])) den += text_[p++];
      const bool followed_by_power = p < text_.size() && text_[p] == '^';
      const bool followed_by_fraction = p < text_.size() && text_[p] == '.';
      if (!followed_by_power && !followed_by_fraction && mpz_class(den) != 0) {
        pos_ = p;
        t.kind = Tok::kNumber;
        t.number = Rational(mpz_class(int_part), mpz_class(den));
        t.text = std::string(text_.substr(start, pos_ - start));
        return t;
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) frac_part += text_[pos_++];
    }
    long exponent = 0;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      bool negative = false;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) negative = text_[p++] == '-';
      if (p < text_.size() && is_digit(text_[p])) {
        std::string digits;
        while (p < text_.size() && is_digit(text_[p])) digits += text_[p++];
        if (digits.size() > 6) throw SyntaxError("exponent too large", pos_, {});
        exponent = std::stol(digits) * (negative ? -1 : 1);
        pos_ = p;
      }
    }
    mpz_class mantissa(int_part.empty() ? std::string("0") : int_part);
    for (char ch : frac_part) mantissa = mantissa * 10 + (ch - '0');
    Rational value(mantissa, mpz_class(1));
    const long scale = exponent - static_cast<long>(frac_part.size());
    if (scale > 0) value *= pow(Rational(10), static_cast<unsigned>(scale));
    if (scale < 0) value /= pow(Rational(10), static_cast<unsigned>(-scale));
    t.kind = Tok::kNumber;
    t.number = value;
    t.text = std::string(text_.substr(start, pos_ - start));
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ConstantTable& constants) : lexer_(text), constants_(constants) {
    advance();
  }

  Expr expression() {
    Expr lhs = term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = cur_.text == "+";
      advance();
      Expr rhs = term();
      lhs = plus ? Expr::add(std::move(lhs), std::move(rhs)) : Expr::sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  void expect_end() {
    if (cur_.kind != Tok::kEnd) {
      throw SyntaxError("unexpected '" + cur_.text + "'", cur_.offset, {"+", "-", "*", "/", "^", "end of input"});
    }
  }

  InequalityStmt statement() {
    InequalityStmt s;
    s.lhs = expression();
    if (cur_.kind != Tok::kRelation) throw SyntaxError("expected a relation", cur_.offset, {"<", "<=", ">", ">="});
    s.relation = relation(cur_.text);
    advance();
    s.rhs = expression();
    if (!is_ident("on")) throw SyntaxError("expected domain", cur_.offset, {"on"});
    advance();
    const std::size_t domain_offset = cur_.offset;
    expect_symbol("[");
    s.lo = bound(false);
    expect_symbol(",");
    s.hi = bound(true);
    expect_symbol("]");
    if (is_ident("sharp")) {
      advance();
      if (!is_ident("at")) throw SyntaxError("expected 'at'", cur_.offset, {"at"});
      advance();
      expect_symbol("{");
      if (!is_symbol("}")) {
        while (true) {
          const std::size_t off = cur_.offset;
          Expr p = expression();
          if (p.depends_on_x()) throw SyntaxError("sharpness point must be constant", off, {});
          s.sharp_points.push_back({p, eval_interval(p, Interval(0.0))});
          if (is_symbol(",")) {
            advance();
            continue;
          }
          break;
        }
      }
      expect_symbol("}");
    }
    expect_end();
    validate_domain(s, domain_offset);
    return s;
  }

 private:
  void advance() { cur_ = lexer_.next(); }
  bool is_symbol(std::string_view s) const { return cur_.kind == Tok::kSymbol && cur_.text == s; }
  bool is_ident(std::string_view s) const { return cur_.kind == Tok::kIdent && cur_.text == s; }

  void expect_symbol(const std::string& s) {
    if (!is_symbol(s)) throw SyntaxError("expected '" + s + "'", cur_.offset, {s});
    advance();
  }

  static Relation relation(const std::string& t) {
    if (t == "<") return Relation::kLess;
    if (t == "<=") return Relation::kLessEq;
    if (t == ">") return Relation::kGreater;
    return Relation::kGreaterEq;
  }

  DomainBound bound(bool upper) {
    DomainBound b;
    const std::size_t off = cur_.offset;
    // inf / -inf
    const std::size_t saved = lexer_.position();
    const Token saved_tok = cur_;
    bool negative = false;
    if (is_symbol("-")) {
      negative = true;
      advance();
    }
    if (is_ident("inf")) {
      if (negative == upper) throw SyntaxError(upper ? "upper bound cannot be -inf" : "lower bound cannot be +inf", off, {});
      advance();
      b.infinite = true;
      b.enclosure = negative ? Interval(-HUGE_VAL) : Interval(HUGE_VAL);
      return b;
    }
    lexer_.reset(saved);
    cur_ = saved_tok;
    b.expr = expression();
    if (b.expr.depends_on_x()) throw SyntaxError("domain bound must be constant", off, {});
    b.enclosure = eval_interval(b.expr, Interval(0.0));
    return b;
  }

  static void validate_domain(const InequalityStmt& s, std::size_t offset) {
    if (!(s.lo.enclosure.hi() < s.hi.enclosure.lo())) {
      throw DomainError("empty or inverted domain at offset " + std::to_string(offset) + ": [" +
                        to_string(s.lo.enclosure) + ", " + to_string(s.hi.enclosure) + "]");
    }
    for (const auto& p : s.sharp_points) {
      if (p.enclosure.hi() < s.lo.enclosure.lo() || p.enclosure.lo() > s.hi.enclosure.hi()) {
        throw DomainError("sharpness point " + to_string(p.expr) + " outside the domain");
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (is_symbol("*") || is_symbol("/")) {
      const bool times = cur_.text == "*";
      advance();
      Expr rhs = unary();
      lhs = times ? Expr::mul(std::move(lhs), std::move(rhs)) : Expr::div(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr unary() {
    if (is_symbol("-")) {
      advance();
      return Expr::neg(unary());
    }
    if (is_symbol("+")) {
      advance();
      return unary();
    }
    return power();
  }

  static std::optional<int> integer_exponent(const Expr& e) {
    if (e.kind() == NodeKind::kConst && e.constant_value().name.empty() && e.constant_value().exact &&
        e.constant_value().exact->is_integer()) {
      const mpz_class v = e.constant_value().exact->numerator();
      if (v.fits_sint_p()) return static_cast<int>(v.get_si());
    }
    if (e.kind() == NodeKind::kNeg) {
      if (auto inner = integer_exponent(e.arg(0))) return -*inner;
    }
    return std::nullopt;
  }

  Expr power() {
    Expr base = atom();
    if (!is_symbol("^")) return base;
    advance();
    const std::size_t off = cur_.offset;
    Expr ex = unary();
    if (auto n = integer_exponent(ex)) return Expr::pow_int(std::move(base), *n);
    if (ex.depends_on_x()) throw SyntaxError("exponent must not depend on x", off, {"constant expression"});
    return Expr::pow_const(std::move(base), std::move(ex));
  }

  Expr atom() {
    if (cur_.kind == Tok::kNumber) {
      Expr e = Expr::constant(cur_.number);
      advance();
      return e;
    }
    if (is_symbol("(")) {
      advance();
      Expr e = expression();
      expect_symbol(")");
      return e;
    }
    if (cur_.kind == Tok::kIdent) {
      const Token id = cur_;
      advance();
      if (is_symbol("(")) {
        advance();
        Expr arg = expression();
        expect_symbol(")");
        if (auto f = func_from_name(id.text)) return Expr::fn(*f, std::move(arg));
        if (auto p = primitive_from_name(id.text)) return Expr::prim(*p, std::move(arg));
        if (id.text == "tan" || id.text == "cot" || id.text == "coth") {
          throw SyntaxError("'" + id.text + "' is not supported; rewrite with sinc/xcot/xcoth and cos",
                            id.offset, {"function name"});
        }
        throw SyntaxError("unknown function '" + id.text + "'", id.offset, {"function name"});
      }
      if (id.text == "x") return Expr::var();
      if (const ConstantValue* c = constants_.find(id.text)) return Expr::constant(*c);
      throw SyntaxError("unknown identifier '" + id.text + "'", id.offset, {"x", "named constant"});
    }
    if (cur_.kind == Tok::kEnd) throw SyntaxError("unexpected end of input", cur_.offset, kOperandStart);
    throw SyntaxError("unexpected '" + cur_.text + "'", cur_.offset, kOperandStart);
  }

  Lexer lexer_;
  const ConstantTable& constants_;
  Token cur_;
};

}  // namespace

Expr parse_expr(std::string_view text, const ConstantTable& constants) {
  Parser p(text, constants);
  Expr e = p.expression();
  p.expect_end();
  return e;
}

InequalityStmt parse_inequality(std::string_view text, const ConstantTable& constants) {
  Parser p(text, constants);
  return p.statement();
}

}  // namespace ineqcert
