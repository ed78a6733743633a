#include "polyquant/symexpr/text.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace polyquant {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

// ---------------------------------------------------------------- printing

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string power_string(Generator g, int power) {
  std::string s(name(g));
  if (power != 1) s += "^" + std::to_string(power);
  return s;
}

struct SignedText {
  bool negative = false;
  std::string body;
};

// Renders |coefficient| as a leading factor; empty when it is a unit that can
// be elided in front of other factors.
SignedText coefficient_factor(const Coefficient& c, bool has_other_factors) {
  SignedText out;
  const mpq_class& re = c.real();
  const mpq_class& im = c.imag();
  if (sgn(im) == 0) {
    out.negative = sgn(re) < 0;
    mpq_class mag = abs(re);
    if (!(mag == 1 && has_other_factors)) out.body = rational_string(mag);
  } else if (sgn(re) == 0) {
    out.negative = sgn(im) < 0;
    mpq_class mag = abs(im);
    out.body = mag == 1 ? "i" : rational_string(mag) + "*i";
  } else {
    out.body = "(" + rational_string(re) + (sgn(im) < 0 ? " - " : " + ");
    mpq_class mag = abs(im);
    out.body += (mag == 1 ? std::string("i") : rational_string(mag) + "*i") + ")";
  }
  return out;
}

SignedText term_text(const Coefficient& coeff, const TermKey& key) {
  std::vector<std::string> numerator;
  std::vector<std::string> denominator;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    Generator g = generator_at(i);
    int power = key.monomial.exponent(g);
    if (power > 0) numerator.push_back(power_string(g, power));
    if (power < 0) denominator.push_back(power_string(g, -power));
  }
  if (!key.exp_arg.is_zero()) numerator.push_back("exp(" + to_string(Expr::from_poly(key.exp_arg)) + ")");

  SignedText out = coefficient_factor(coeff, !numerator.empty() || !denominator.empty());
  std::string body = out.body;
  for (const auto& f : numerator) body += (body.empty() ? "" : "*") + f;
  if (body.empty()) body = "1";
  for (const auto& f : denominator) body += "/" + f;
  out.body = body;
  return out;
}

}  // namespace

std::string to_string(const Coefficient& c) {
  SignedText t = coefficient_factor(c, false);
  return (t.negative ? "-" : "") + t.body;
}

std::string to_string(const Expr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Descending order puts leading generators (x0, phi, pi0, ...) first.
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    SignedText t = term_text(it->second, it->first);
    if (first) {
      out += (t.negative ? "-" : "") + t.body;
    } else {
      out += (t.negative ? " - " : " + ") + t.body;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  bool starts_atom() {
    char ch = peek();
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '(' || ch == '.';
  }

  Expr sum() {
    Expr result;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Expr t = product();
    result = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        result += product();
      } else if (accept('-')) {
        result -= product();
      } else {
        break;
      }
    }
    return result;
  }

  Expr product() {
    Expr result = unary();
    while (true) {
      if (accept('*')) {
        result *= unary();
      } else if (peek() == '/') {
        std::size_t at = pos_++;
        Expr divisor = unary();
        try {
          result *= divisor.inverse();
        } catch (const std::domain_error& err) {
          throw ParseError(at, err.what());
        }
      } else if (starts_atom()) {
        result *= unary();
      } else {
        break;
      }
    }
    return result;
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    std::size_t at = pos_;
    int n = 0;
    if (accept('(')) {
      n = integer();
      expect(')');
    } else {
      n = integer();
    }
    try {
      return base.pow(n);
    } catch (const std::domain_error& err) {
      throw ParseError(at, err.what());
    }
  }

  int integer() {
    bool negative = accept('-');
    if (!negative) accept('+');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return negative ? -n : n;
  }

  Expr number() {
    std::size_t start = pos_;
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_dot = false;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
        if (seen_dot) ++fraction_digits;
      } else if (ch == '.' && !seen_dot) {
        seen_dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < fraction_digits; ++i) den *= 10;
    return Coefficient(mpq_class(num, den), mpq_class(0));
  }

  Expr atom() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      Expr inner = sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (!std::isalpha(static_cast<unsigned char>(ch))) {
      if (ch == '\0') fail("unexpected end of input");
      fail("unexpected '" + std::string(1, ch) + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view ident = text_.substr(start, pos_ - start);
    if (ident == "i") return Expr::imaginary_unit();
    if (ident == "exp") {
      expect('(');
      std::size_t arg_at = pos_;
      Expr arg = sum();
      expect(')');
      try {
        return Expr::exp(arg);
      } catch (const std::invalid_argument& err) {
        throw ParseError(arg_at, err.what());
      }
    }
    auto g = generator_from_name(ident);
    if (!g) {
      pos_ = start;
      fail("unknown symbol '" + std::string(ident) + "'");
    }
    return Expr::gen(*g);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace polyquant
