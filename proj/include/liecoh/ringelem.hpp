#ifndef LIECOH_RINGELEM_HPP
#define LIECOH_RINGELEM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"
#include "liecoh/symconst.hpp"

namespace liecoh {

// Multiset of symbolic-constant factors, kept sorted with positive exponents.
using ConstMono = std::vector<std::pair<SymConst, int>>;

// Element of the coefficient ring: a finite sum of terms, each a rational
// times a monomial in symbolic constants. Canonical form: factor lists
// sorted, no zero coefficients, terms sorted by graded-lex monomial order,
// and even powers of the imaginary unit folded into the sign.
class RingElem {
 public:
  struct Term {
    Rational coeff;
    ConstMono mono;
  };

  RingElem() = default;
  RingElem(Rational r);  // NOLINT: implicit by design
  RingElem(long long n) : RingElem(Rational(n)) {}
  static RingElem constant(const SymConst& c);
  static RingElem term(Rational coeff, ConstMono mono);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  const std::vector<Term>& terms() const { return terms_; }
  int total_degree() const;

  RingElem operator-() const;
  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Formal conjugation: constants are real except the imaginary unit.
  RingElem conj() const;

  // Simultaneous substitution of symbolic constants; unbound ones persist.
  RingElem substitute(const std::map<SymConst, RingElem>& bindings) const;

  // Exact division; nullopt when o does not divide this element.
  std::optional<RingElem> try_divide(const RingElem& o) const;

  std::string to_string() const;
  std::string to_latex() const;
  size_t hash() const;

  // Collects the distinct constants appearing in this element.
  std::vector<SymConst> constants() const;

  static RingElem from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;  // canonical order, ascending

  void normalize();
};

int compare_mono(const ConstMono& a, const ConstMono& b);

}  // namespace liecoh

#endif
