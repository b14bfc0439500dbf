#include "liecoh/rational.hpp"

#include <utility>
#include <vector>

#include "liecoh/errors.hpp"

namespace liecoh {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw Error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
  return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

size_t Rational::hash() const {
  return num_.hash() * 31 + den_.hash();
}

Rational Rational::from_string(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (int i = 1; i <= k; ++i) {
    r = r * BigInt(n - k + i);
    r = r / BigInt(i);
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r = r * BigInt(i);
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw Error("bernoulli: negative index");
  std::vector<Rational> b(static_cast<size_t>(n) + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc = acc + Rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / Rational(m + 1);
  }
  return b[n];
}

}  // namespace liecoh
