#ifndef LIECOH_SYMCONST_HPP
#define LIECOH_SYMCONST_HPP

#include <string>

namespace liecoh {

// A named symbolic scalar. Labels are canonical: two SymConst values are
// equal iff their structured labels are equal. The imaginary unit is a
// distinguished constant so formal conjugation can act on it; its square
// reduces to -1 during normalization.
class SymConst {
 public:
  enum class Kind { StructN, Kappa, Lambda, User, Imag };

  static SymConst structure(const std::string& a, const std::string& b) {
    return SymConst(Kind::StructN, a, b, 0);
  }
  static SymConst kappa(const std::string& a, const std::string& b) {
    return SymConst(Kind::Kappa, a, b, 0);
  }
  static SymConst lambda(int i) { return SymConst(Kind::Lambda, "", "", i); }
  static SymConst user(const std::string& name) { return SymConst(Kind::User, name, "", 0); }
  static SymConst imag() { return SymConst(Kind::Imag, "", "", 0); }

  Kind kind() const { return kind_; }
  const std::string& a() const { return a_; }
  const std::string& b() const { return b_; }
  int index() const { return index_; }

  bool operator==(const SymConst& o) const {
    return kind_ == o.kind_ && index_ == o.index_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const SymConst& o) const { return !(*this == o); }
  bool operator<(const SymConst& o) const;

  // Canonical text form, reparsed by the expression reader:
  // N[r,s], kappa[r,s], lambda[1], i, or a bare user name.
  std::string to_string() const;
  std::string to_latex() const;
  size_t hash() const;

 private:
  SymConst(Kind k, std::string a, std::string b, int index)
      : kind_(k), a_(std::move(a)), b_(std::move(b)), index_(index) {}

  Kind kind_;
  std::string a_, b_;
  int index_;
};

}  // namespace liecoh

#endif
