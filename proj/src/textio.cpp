#include "liecoh/textio.hpp"

#include <cctype>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression: " + s_);
    return s_[pos_++];
  }
  void expect(char c) {
    char g = get();
    if (g != c)
      throw ParseError(std::string("expected '") + c + "' but found '" + g + "' in: " + s_);
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string read_ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError("expected identifier in: " + s_);
    return s_.substr(start, pos_ - start);
  }

  // Bracket payloads may contain root arithmetic like r+s or -2r-s.
  std::string read_bracket_name() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']') ++pos_;
    if (start == pos_) throw ParseError("empty name in brackets: " + s_);
    std::string name = s_.substr(start, pos_ - start);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    return name;
  }

  BigInt read_integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer in: " + s_);
    return BigInt::from_string(s_.substr(start, pos_ - start));
  }

  const std::string& text() const { return s_; }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

int read_exponent(Scanner& sc) {
  if (!sc.try_consume('^')) return 1;
  BigInt e = sc.read_integer();
  if (!e.fits_i64()) throw ParseError("exponent too large in: " + sc.text());
  return static_cast<int>(e.to_i64());
}

MultiPoly parse_sum(Scanner& sc);

// One multiplicative factor: a rational, a symbolic constant, or a variable.
MultiPoly parse_factor(Scanner& sc) {
  char c = sc.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    BigInt num = sc.read_integer();
    BigInt den(1);
    if (sc.try_consume('/')) den = sc.read_integer();
    Rational r(num, den);
    int e = read_exponent(sc);
    MultiPoly base{r};
    return base.pow(e);
  }
  if (c == '(') {
    sc.expect('(');
    MultiPoly inner = parse_sum(sc);
    sc.expect(')');
    int e = read_exponent(sc);
    return inner.pow(e);
  }
  std::string ident = sc.read_ident();
  if (ident == "t" && sc.peek_raw() != '[') {
    return MultiPoly::var(VarId::t(), read_exponent(sc));
  }
  if (ident == "z" && sc.peek_raw() != '[') {
    return MultiPoly::var(VarId::z(), read_exponent(sc));
  }
  if (ident == "i" && sc.peek_raw() != '[') {
    MultiPoly base{RingElem::constant(SymConst::imag())};
    return base.pow(read_exponent(sc));
  }
  if (ident == "zeta" || ident == "zetabar") {
    bool bar = ident == "zetabar";
    int primes = 0;
    while (sc.try_consume('\'')) ++primes;
    sc.expect('[');
    std::string root = sc.read_bracket_name();
    VarId v = VarId::zeta(root, bar, primes);
    if (sc.try_consume(',')) {
      BigInt m = sc.read_integer();
      v = VarId::zeta_mode(root, static_cast<int>(m.to_i64()), bar, primes);
    }
    sc.expect(']');
    return MultiPoly::var(v, read_exponent(sc));
  }
  if (ident == "N" || ident == "kappa") {
    sc.expect('[');
    std::string a = sc.read_bracket_name();
    sc.expect(',');
    std::string b = sc.read_bracket_name();
    sc.expect(']');
    SymConst s = ident == "N" ? SymConst::structure(a, b) : SymConst::kappa(a, b);
    MultiPoly base{RingElem::constant(s)};
    return base.pow(read_exponent(sc));
  }
  if (ident == "lambda") {
    sc.expect('[');
    BigInt idx = sc.read_integer();
    sc.expect(']');
    MultiPoly base{RingElem::constant(SymConst::lambda(static_cast<int>(idx.to_i64())))};
    return base.pow(read_exponent(sc));
  }
  MultiPoly base{RingElem::constant(SymConst::user(ident))};
  return base.pow(read_exponent(sc));
}

MultiPoly parse_term(Scanner& sc) {
  MultiPoly p = parse_factor(sc);
  while (sc.try_consume('*')) p = p * parse_factor(sc);
  return p;
}

MultiPoly parse_sum(Scanner& sc) {
  bool neg = false;
  if (sc.try_consume('-')) {
    neg = true;
  } else {
    sc.try_consume('+');
  }
  MultiPoly acc = parse_term(sc);
  if (neg) acc = -acc;
  while (true) {
    char c = sc.peek();
    if (c == '+') {
      sc.expect('+');
      acc = acc + parse_term(sc);
    } else if (c == '-') {
      sc.expect('-');
      acc = acc - parse_term(sc);
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

MultiPoly parse_poly(const std::string& text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty expression");
  if (sc.peek() == '0') {
    Scanner probe(text);
    BigInt v = probe.read_integer();
    if (probe.done() && v.is_zero()) return MultiPoly();
  }
  MultiPoly p = parse_sum(sc);
  if (!sc.done()) throw ParseError("trailing input in expression: " + text);
  return p;
}

RingElem parse_ring(const std::string& text) {
  MultiPoly p = parse_poly(text);
  if (!p.is_ring_elem()) throw ParseError("expression is not scalar: " + text);
  return p.ring_value();
}

}  // namespace liecoh
