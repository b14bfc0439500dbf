#ifndef LIECOH_BIGINT_HPP
#define LIECOH_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace liecoh {

// Signed arbitrary-precision integer with an inline fast path for values
// that fit in a signed 64-bit word. Magnitudes that overflow are promoted
// to a little-endian base 2^32 limb vector. Values are immutable in the
// sense that every operation returns a fresh BigInt.
class BigInt {
 public:
  BigInt() : small_(0), big_(false) {}
  BigInt(long long v) : small_(v), big_(false) {}  // NOLINT: implicit by design

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return big_ ? mag_.empty() : small_ == 0; }
  bool is_negative() const { return big_ ? neg_ : small_ < 0; }
  bool is_one() const { return !big_ && small_ == 1; }

  // Valid only when the value fits; callers check fits_i64() first.
  bool fits_i64() const;
  long long to_i64() const;

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;

  // Truncated division (quotient rounds toward zero, C semantics).
  // Both are computed in one pass by divmod().
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  bool operator==(const BigInt& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const BigInt& o) const { return cmp(*this, o) != 0; }
  bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

  static int cmp(const BigInt& a, const BigInt& b);
  static BigInt gcd(BigInt a, BigInt b);
  BigInt abs() const;

  std::string to_string() const;
  size_t hash() const;

 private:
  // Invariant: big_ implies mag_ has no leading zero limb and is non-empty;
  // small_ is meaningful only when !big_.
  long long small_;
  std::vector<uint32_t> mag_;
  bool neg_ = false;
  bool big_;

  static BigInt make_big(bool neg, std::vector<uint32_t> mag);
  std::vector<uint32_t> magnitude() const;
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace liecoh

#endif
