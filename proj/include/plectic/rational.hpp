#ifndef PLECTIC_RATIONAL_HPP
#define PLECTIC_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace plectic {

/// Arbitrary-precision signed integer, sign-magnitude, base 2^32.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  /// Truncated division; remainder has the sign of the dividend.
  static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;

  BigInt abs() const;
  static BigInt gcd(BigInt a, BigInt b);

  std::string to_string() const;
  /// Value as long long; caller must know it fits.
  long long to_ll() const;

private:
  int sign_ = 0;                  // -1, 0, +1
  std::vector<uint32_t> mag_;     // little-endian limbs, no leading zeros

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);  // a >= b
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  void trim();
};

/// Exact rational number; denominator > 0, always reduced, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(long long n, long long d);
  Rational(BigInt n, BigInt d);

  static Rational from_string(const std::string& s);  // "3", "-1/2"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
  Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
  Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  Rational pow(int e) const;  // e may be negative for nonzero values
  std::string to_string() const;

private:
  BigInt num_, den_;
  void reduce();
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

/// n! as a rational (exact).
Rational factorial(int n);
/// Binomial coefficient C(n, k), zero outside the triangle.
Rational binomial(int n, int k);
/// Multinomial coefficient (sum k_i)! / prod k_i!.
Rational multinomial(const std::vector<int>& parts);

}  // namespace plectic

#endif
