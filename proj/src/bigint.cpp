#include "liecoh/bigint.hpp"

#include <algorithm>
#include <cstdlib>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

using u32 = uint32_t;
using u64 = uint64_t;
using i64 = long long;
using i128 = __int128;

constexpr i64 kI64Min = INT64_MIN;

void trim(std::vector<u32>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<u32> mag_from_u64(u64 m) {
  std::vector<u32> v;
  while (m) {
    v.push_back(static_cast<u32>(m & 0xffffffffu));
    m >>= 32;
  }
  return v;
}

u64 abs_u64(i64 v) {
  return v < 0 ? (~static_cast<u64>(v)) + 1 : static_cast<u64>(v);
}

}  // namespace

BigInt BigInt::make_big(bool neg, std::vector<u32> mag) {
  trim(mag);
  BigInt r;
  if (mag.empty()) return r;
  // Demote back to the small representation when the magnitude fits.
  if (mag.size() <= 2) {
    u64 m = mag[0];
    if (mag.size() == 2) m |= static_cast<u64>(mag[1]) << 32;
    if (m <= static_cast<u64>(INT64_MAX)) {
      r.small_ = neg ? -static_cast<i64>(m) : static_cast<i64>(m);
      return r;
    }
    if (neg && m == abs_u64(kI64Min)) {
      r.small_ = kI64Min;
      return r;
    }
  }
  r.big_ = true;
  r.neg_ = neg;
  r.mag_ = std::move(mag);
  return r;
}

std::vector<u32> BigInt::magnitude() const {
  if (big_) return mag_;
  return mag_from_u64(abs_u64(small_));
}

bool BigInt::fits_i64() const { return !big_; }

long long BigInt::to_i64() const {
  if (big_) throw Error("BigInt::to_i64: value out of range");
  return small_;
}

BigInt BigInt::abs() const { return is_negative() ? -*this : *this; }

BigInt BigInt::operator-() const {
  if (!big_) {
    if (small_ != kI64Min) return BigInt(-small_);
    return make_big(false, mag_from_u64(abs_u64(kI64Min)));
  }
  BigInt r = *this;
  r.neg_ = !r.neg_;
  return r;
}

int BigInt::cmp_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (!a.big_ && !b.big_) return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
  bool an = a.is_negative(), bn = b.is_negative();
  if (an != bn) return an ? -1 : 1;
  int c = cmp_mag(a.magnitude(), b.magnitude());
  return an ? -c : c;
}

std::vector<u32> BigInt::add_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
  const std::vector<u32>& x = a.size() >= b.size() ? a : b;
  const std::vector<u32>& y = a.size() >= b.size() ? b : a;
  std::vector<u32> r(x.size() + 1, 0);
  u64 carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    u64 s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = static_cast<u32>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<u32>(carry);
  trim(r);
  return r;
}

// Requires |a| >= |b|.
std::vector<u32> BigInt::sub_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
  std::vector<u32> r(a.size(), 0);
  i64 borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    i64 d = static_cast<i64>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<u32>(d);
  }
  trim(r);
  return r;
}

std::vector<u32> BigInt::mul_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u32> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    u64 carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      u64 cur = static_cast<u64>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<u32>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      u64 cur = r[k] + carry;
      r[k] = static_cast<u32>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(r);
  return r;
}

// Knuth algorithm D, normalized long division on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<u32>& a, const std::vector<u32>& b,
                        std::vector<u32>& q, std::vector<u32>& r) {
  if (b.empty()) throw Error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    q.assign(a.size(), 0);
    u64 rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
      u64 cur = (rem << 32) | a[i];
      q[i] = static_cast<u32>(cur / b[0]);
      rem = cur % b[0];
    }
    trim(q);
    r = mag_from_u64(rem);
    return;
  }
  int shift = 0;
  u32 top = b.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  auto shl = [&](const std::vector<u32>& v) {
    if (shift == 0) return v;
    std::vector<u32> o(v.size() + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      o[i] |= v[i] << shift;
      o[i + 1] = static_cast<u32>(static_cast<u64>(v[i]) >> (32 - shift));
    }
    trim(o);
    return o;
  };
  std::vector<u32> u = shl(a), v = shl(b);
  size_t n = v.size(), m = u.size() - n;
  u.push_back(0);
  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    u64 num = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
    u64 qhat = num / v[n - 1];
    u64 rhat = num % v[n - 1];
    while (qhat >= (1ull << 32) ||
           (n >= 2 && qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2]))) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= (1ull << 32)) break;
    }
    // Multiply-subtract, with add-back when qhat was one too large.
    i128 borrow = 0;
    for (size_t i = 0; i < n; ++i) {
      i128 p = static_cast<i128>(qhat) * v[i];
      i128 sub = static_cast<i128>(u[i + j]) - (p & 0xffffffffu) - borrow;
      u[i + j] = static_cast<u32>(sub & 0xffffffffu);
      borrow = (p >> 32) - (sub >> 32);
    }
    i128 sub = static_cast<i128>(u[j + n]) - borrow;
    u[j + n] = static_cast<u32>(sub & 0xffffffffu);
    if (sub < 0) {
      --qhat;
      u64 carry = 0;
      for (size_t i = 0; i < n; ++i) {
        u64 s = static_cast<u64>(u[i + j]) + v[i] + carry;
        u[i + j] = static_cast<u32>(s & 0xffffffffu);
        carry = s >> 32;
      }
      u[j + n] = static_cast<u32>(u[j + n] + carry);
    }
    q[j] = static_cast<u32>(qhat);
  }
  trim(q);
  u.resize(n);
  if (shift) {
    std::vector<u32> o(u.size(), 0);
    for (size_t i = 0; i < u.size(); ++i) {
      o[i] = u[i] >> shift;
      if (i + 1 < u.size()) o[i] |= u[i + 1] << (32 - shift);
    }
    u = o;
  }
  trim(u);
  r = u;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (!big_ && !o.big_) {
    i64 s;
    if (!__builtin_add_overflow(small_, o.small_, &s)) return BigInt(s);
  }
  bool an = is_negative(), bn = o.is_negative();
  std::vector<u32> am = magnitude(), bm = o.magnitude();
  if (an == bn) return make_big(an, add_mag(am, bm));
  int c = cmp_mag(am, bm);
  if (c == 0) return BigInt(0);
  if (c > 0) return make_big(an, sub_mag(am, bm));
  return make_big(bn, sub_mag(bm, am));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (!big_ && !o.big_) {
    i64 p;
    if (!__builtin_mul_overflow(small_, o.small_, &p)) return BigInt(p);
  }
  if (is_zero() || o.is_zero()) return BigInt(0);
  return make_big(is_negative() != o.is_negative(), mul_mag(magnitude(), o.magnitude()));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw Error("BigInt: division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == kI64Min && b.small_ == -1)) {
    q = BigInt(a.small_ / b.small_);
    r = BigInt(a.small_ % b.small_);
    return;
  }
  std::vector<u32> qm, rm;
  divmod_mag(a.magnitude(), b.magnitude(), qm, rm);
  q = make_big(a.is_negative() != b.is_negative(), std::move(qm));
  r = make_big(a.is_negative(), std::move(rm));
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("bad integer literal: " + s);
  BigInt r(0);
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer literal: " + s);
    r = r * ten + BigInt(s[i] - '0');
  }
  return neg ? -r : r;
}

std::string BigInt::to_string() const {
  if (!big_) return std::to_string(small_);
  std::vector<u32> m = mag_;
  std::string digits;
  std::vector<u32> divisor = {1000000000u};
  while (!m.empty()) {
    std::vector<u32> q, r;
    divmod_mag(m, divisor, q, r);
    u64 chunk = r.empty() ? 0 : r[0];
    std::string part = std::to_string(chunk);
    m = q;
    if (m.empty()) {
      digits = part + digits;
    } else {
      digits = std::string(9 - part.size(), '0') + part + digits;
    }
  }
  if (digits.empty()) digits = "0";
  return (neg_ ? "-" : "") + digits;
}

size_t BigInt::hash() const {
  if (!big_) return std::hash<long long>()(small_);
  size_t h = neg_ ? 0x9e3779b97f4a7c15ull : 0;
  for (u32 limb : mag_) h = h * 1000003u + limb;
  return h;
}

}  // namespace liecoh
