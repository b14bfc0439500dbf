#ifndef LIECOH_RATIONAL_HPP
#define LIECOH_RATIONAL_HPP

#include <string>

#include "liecoh/bigint.hpp"

namespace liecoh {

// Exact rational number. Canonical form is maintained by every operation:
// the denominator is positive and coprime to the numerator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  static Rational from_string(const std::string& s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  bool is_negative() const { return num_.is_negative(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational inverse() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  std::string to_string() const;
  size_t hash() const;

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

// Bernoulli number B_n in the convention B_1 = -1/2, computed from the
// defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
Rational bernoulli(int n);

// Exact binomial coefficient C(n, k).
BigInt binomial(int n, int k);

// n! as a BigInt.
BigInt factorial(int n);

}  // namespace liecoh

#endif
