#include "nlie/rational.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace nlie {

namespace {
constexpr uint64_t kBase = 1000000000ull;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (m != 0) {
    mag_.push_back(static_cast<uint32_t>(m % kBase));
    m /= kBase;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view s) {
  size_t pos = 0;
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("empty integer literal");
  for (size_t i = pos; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
  BigInt out;
  // consume 9 decimal digits per limb, from the most significant end
  size_t n = s.size() - pos;
  size_t first = n % 9;
  auto push_chunk = [&](std::string_view chunk) {
    uint32_t v = 0;
    for (char c : chunk) v = v * 10 + static_cast<uint32_t>(c - '0');
    // out = out * 1e9 + v: shift limbs up by one, then add
    if (!out.mag_.empty()) out.mag_.insert(out.mag_.begin(), 0);
    if (v != 0) {
      if (out.mag_.empty()) out.mag_.push_back(v);
      else out.mag_ = add_mag(out.mag_, {v});
    }
  };
  if (first != 0) push_chunk(s.substr(pos, first));
  for (size_t i = pos + first; i < s.size(); i += 9) push_chunk(s.substr(i, 9));
  out.sign_ = sign;
  out.trim();
  return out;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += std::to_string(mag_.back());
  char buf[16];
  for (size_t i = mag_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
    out += buf;
  }
  return out;
}

bool BigInt::fits_longlong() const {
  static const BigInt lo(std::numeric_limits<long long>::min());
  static const BigInt hi(std::numeric_limits<long long>::max());
  return lo <= *this && *this <= hi;
}

long long BigInt::to_longlong() const {
  long long v = 0;
  for (size_t i = mag_.size(); i-- > 0;) v = v * static_cast<long long>(kBase) + mag_[i];
  return sign_ < 0 ? -v : v;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<uint32_t>(s % kBase));
    carry = s / kBase;
  }
  return out;
}

// precondition: a >= b
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(s));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  // {0,1} encodes a one-limb shift used by from_string
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = acc[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  std::vector<uint32_t> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint32_t>(acc[i]);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Schoolbook long division, one base-1e9 digit of quotient at a time.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.assign(a.size(), 0);
  r.clear();
  for (size_t i = a.size(); i-- > 0;) {
    // r = r * base + a[i]
    r.insert(r.begin(), a[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    // binary search the digit d with d*b <= r < (d+1)*b
    uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      uint32_t mid = lo + (hi - lo) / 2;
      std::vector<uint32_t> t = mul_mag(b, {mid});
      if (cmp_mag(t, r) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    q[i] = digit;
    if (digit != 0) r = sub_mag(r, mul_mag(b, {digit}));
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.sign_ = a.sign_ * b.sign_;
  if (out.sign_ != 0) out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  out.trim();
  return out;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("integer division by zero");
  BigInt q;
  std::vector<uint32_t> qa, ra;
  BigInt::divmod_mag(a.mag_, b.mag_, qa, ra);
  q.mag_ = qa;
  q.sign_ = qa.empty() ? 0 : a.sign_ * b.sign_;
  q.trim();
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("integer modulo by zero");
  BigInt r;
  std::vector<uint32_t> qa, ra;
  BigInt::divmod_mag(a.mag_, b.mag_, qa, ra);
  r.mag_ = ra;
  r.sign_ = ra.empty() ? 0 : a.sign_;
  r.trim();
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool BigInt::perfect_square(const BigInt& n, BigInt* root) {
  if (n.sign_ < 0) return false;
  if (n.sign_ == 0) {
    if (root) *root = BigInt(0);
    return true;
  }
  // binary search sqrt
  BigInt lo(1), hi = n;
  while (lo <= hi) {
    BigInt mid = (lo + hi) / BigInt(2);
    BigInt sq = mid * mid;
    if (sq == n) {
      if (root) *root = mid;
      return true;
    }
    if (sq < n) lo = mid + BigInt(1);
    else hi = mid - BigInt(1);
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
  BigInt num = BigInt::from_string(s.substr(0, slash));
  BigInt den = BigInt::from_string(s.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

bool Rational::is_rational_square() const {
  // reduced p/q is a square iff p >= 0 and both p and q are perfect squares
  if (sign() < 0) return false;
  return BigInt::perfect_square(num_) && BigInt::perfect_square(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace nlie
