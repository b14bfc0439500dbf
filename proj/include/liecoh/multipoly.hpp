#ifndef LIECOH_MULTIPOLY_HPP
#define LIECOH_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "liecoh/ringelem.hpp"

namespace liecoh {

// Identifies one polynomial variable. The zeta family is indexed by the
// label of the positive generator it multiplies, carries a bar flag for
// conjugated variables and a prime level (0, 1 or 2) to distinguish the
// arguments of the normalization polynomial, and may carry a Laurent mode
// index in the loop setting. t is the formal deformation parameter and z
// the loop variable; z alone admits negative exponents.
class VarId {
 public:
  enum class Kind { Zeta, T, Z };

  static VarId zeta(const std::string& root, bool bar = false, int primes = 0);
  static VarId zeta_mode(const std::string& root, int mode, bool bar = false, int primes = 0);
  static VarId t() { return VarId(Kind::T); }
  static VarId z() { return VarId(Kind::Z); }

  Kind kind() const { return kind_; }
  const std::string& root() const { return root_; }
  bool bar() const { return bar_; }
  int primes() const { return primes_; }
  bool has_mode() const { return has_mode_; }
  int mode() const { return mode_; }

  VarId with_bar(bool b) const;
  VarId with_primes(int p) const;

  bool operator==(const VarId& o) const;
  bool operator!=(const VarId& o) const { return !(*this == o); }
  bool operator<(const VarId& o) const;

  std::string to_string() const;
  std::string to_latex() const;
  size_t hash() const;

 private:
  explicit VarId(Kind k) : kind_(k) {}

  Kind kind_;
  std::string root_;
  bool bar_ = false;
  int primes_ = 0;
  bool has_mode_ = false;
  int mode_ = 0;
};

using VarMono = std::vector<std::pair<VarId, int>>;

// Multivariate polynomial over the coefficient ring, Laurent in z only.
class MultiPoly {
 public:
  struct Term {
    RingElem coeff;
    VarMono mono;
  };

  MultiPoly() = default;
  MultiPoly(RingElem c);  // NOLINT: implicit by design
  MultiPoly(Rational c) : MultiPoly(RingElem(std::move(c))) {}
  MultiPoly(long long c) : MultiPoly(RingElem(c)) {}
  static MultiPoly var(const VarId& v, int exp = 1);
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_ring_elem() const;
  RingElem ring_value() const;  // requires is_ring_elem()
  const std::vector<Term>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scale(const RingElem& c) const;
  MultiPoly pow(int n) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Simultaneous substitution; unbound variables persist.
  MultiPoly substitute(const std::map<VarId, MultiPoly>& bindings) const;
  MultiPoly substitute_consts(const std::map<SymConst, RingElem>& bindings) const;

  MultiPoly derivative(const VarId& v) const;
  // Polynomial coefficient of v^k (the remaining variables persist).
  MultiPoly coefficient_of(const VarId& v, int k) const;
  MultiPoly constant_term() const;

  // Formal conjugation: toggles bars on zeta variables, conjugates
  // coefficients, and maps z to 1/z (z lives on the unit circle).
  MultiPoly conj() const;

  int degree_in(const VarId& v) const;
  int min_degree_in(const VarId& v) const;  // relevant for Laurent z
  int total_degree() const;
  std::vector<VarId> variables() const;
  bool depends_on(const VarId& v) const { return degree_in(v) != 0 || min_degree_in(v) != 0; }

  std::optional<MultiPoly> try_divide(const MultiPoly& o) const;

  std::string to_string() const;
  std::string to_latex() const;
  size_t hash() const;

 private:
  std::vector<Term> terms_;  // canonical ascending graded-lex order

  void normalize();
};

}  // namespace liecoh

#endif
