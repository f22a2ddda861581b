#include <cctype>
#include <charconv>
#include <map>
#include <utility>

#include "qvf/io.hpp"

namespace qvf {

namespace {

constexpr int kMaxIntermediateDegree = 12;

// Sparse bivariate polynomial keyed by (deg x, deg y).
class Sparse {
 public:
  Sparse() = default;
  static Sparse constant(Complex c) {
    Sparse s;
    s.add({0, 0}, c);
    return s;
  }
  static Sparse monomial(int i, int j) {
    Sparse s;
    s.add({i, j}, 1.0);
    return s;
  }

  void add(std::pair<int, int> m, Complex c) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == Complex(0.0)) terms_.erase(m);
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
  }
  bool is_constant() const { return degree() <= 0; }
  Complex constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  Sparse operator+(const Sparse& o) const {
    Sparse r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
  }
  Sparse operator-() const {
    Sparse r;
    for (const auto& [m, c] : terms_) r.add(m, -c);
    return r;
  }
  Sparse operator*(const Sparse& o) const {
    Sparse r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    return r;
  }
  Sparse scaled(Complex s) const {
    Sparse r;
    for (const auto& [m, c] : terms_) r.add(m, c * s);
    return r;
  }

  Poly2c to_poly2() const {
    Poly2c p;
    for (const auto& [m, c] : terms_) {
      if (m == std::pair{0, 0}) p[Monomial::One] = c;
      else if (m == std::pair{1, 0}) p[Monomial::X] = c;
      else if (m == std::pair{0, 1}) p[Monomial::Y] = c;
      else if (m == std::pair{2, 0}) p[Monomial::XX] = c;
      else if (m == std::pair{1, 1}) p[Monomial::XY] = c;
      else if (m == std::pair{0, 2}) p[Monomial::YY] = c;
    }
    return p;
  }

 private:
  std::map<std::pair<int, int>, Complex> terms_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Sparse parse() {
    skip_space();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    Sparse e = expr();
    skip_space();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'i' || c == 'x' ||
           c == 'y' || c == '(';
  }

  static Sparse checked(Sparse p, std::size_t at) {
    if (p.degree() > kMaxIntermediateDegree)
      throw Error(ErrorKind::DegreeTooHigh,
                  "expression degree exceeds supported range at position " + std::to_string(at));
    return p;
  }

  Sparse expr() {
    Sparse acc;
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Sparse t = term();
      acc = c == '+' ? acc + t : acc + (-t);
    }
    return acc;
  }

  Sparse term() {
    Sparse acc = factor();
    for (;;) {
      const char c = peek();
      const std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        acc = checked(acc * factor(), at);
      } else if (c == '/') {
        ++pos_;
        const Sparse d = factor();
        if (!d.is_constant())
          throw SyntaxError(at, "division by a non-constant expression");
        if (d.constant_term() == Complex(0.0)) throw SyntaxError(at, "division by zero");
        acc = acc.scaled(1.0 / d.constant_term());
      } else if (starts_primary(c)) {
        acc = checked(acc * factor(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  Sparse factor() {
    const char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      Sparse f = factor();
      return c == '-' ? -f : f;
    }
    Sparse base = primary();
    while (peek() == '^') {
      const std::size_t at = pos_;
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw SyntaxError(start, "expected a positive integer exponent");
      int n = 0;
      const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, n);
      if (ec != std::errc() || n < 1)
        throw SyntaxError(start, "expected a positive integer exponent");
      if (!base.is_constant() && n > kMaxIntermediateDegree)
        throw Error(ErrorKind::DegreeTooHigh,
                    "exponent too large at position " + std::to_string(at));
      Sparse r = Sparse::constant(1.0);
      for (int k = 0; k < n; ++k) r = checked(r * base, at);
      base = r;
    }
    return base;
  }

  Sparse primary() {
    const char c = peek();
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of expression");
    if (c == 'x') {
      ++pos_;
      return Sparse::monomial(1, 0);
    }
    if (c == 'y') {
      ++pos_;
      return Sparse::monomial(0, 1);
    }
    if (c == 'i') {
      ++pos_;
      return Sparse::constant(Complex(0.0, 1.0));
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Sparse e = expr();
      if (peek() != ')') throw SyntaxError(pos_ < s_.size() ? pos_ : open, "expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Sparse number() {
    const std::size_t start = pos_;
    auto digit = [&](std::size_t k) {
      return k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]));
    };
    while (digit(pos_)) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (digit(pos_)) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
      if (digit(k)) {
        pos_ = k;
        while (digit(pos_)) ++pos_;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc() || ptr != s_.data() + pos_) throw SyntaxError(start, "malformed number");
    return Sparse::constant(value);
  }
};

}  // namespace

Poly2c parse_polynomial(std::string_view text) {
  const Sparse p = Parser(text).parse();
  if (p.degree() > 2)
    throw Error(ErrorKind::DegreeTooHigh,
                "polynomial has degree " + std::to_string(p.degree()) + " (at most 2 allowed)");
  return p.to_poly2();
}

}  // namespace qvf
