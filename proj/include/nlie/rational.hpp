#ifndef NLIE_RATIONAL_HPP
#define NLIE_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nlie {

/// Arbitrary-precision signed integer, base 1e9 limbs.
///
/// Small and unoptimized on purpose: every computation in this project is a
/// handful of low-dimensional exact eliminations, so schoolbook arithmetic
/// is more than enough.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(std::string_view s);
  std::string to_string() const;

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool fits_longlong() const;
  long long to_longlong() const;  // precondition: fits_longlong()

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);  // truncated
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(BigInt a, BigInt b);
  /// Exact integer square root test; returns true and sets root if n = root^2.
  static bool perfect_square(const BigInt& n, BigInt* root = nullptr);

private:
  // mag_ holds base-1e9 digits, least significant first, no trailing zeros.
  int sign_ = 0;
  std::vector<uint32_t> mag_;

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  void trim();
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Element of the ground field: reduced fraction with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p" or "p/q" (q > 0 after normalization). Throws std::invalid_argument.
  static Rational from_string(std::string_view s);
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational inverse() const;  // throws std::domain_error on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// True iff this value is the square of some rational.
  bool is_rational_square() const;

private:
  BigInt num_, den_;
  void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace nlie

#endif
