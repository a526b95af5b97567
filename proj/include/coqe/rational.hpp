#ifndef COQE_RATIONAL_HPP
#define COQE_RATIONAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coqe {

/// Error type shared across the library. `where` carries a byte offset for
/// parse errors and -1 otherwise.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, long where = -1)
      : std::runtime_error(msg), offset(where) {}
  long offset;
};

/// Arbitrary-precision signed integer, base 2^32 little-endian magnitude.
/// Only the operations the expression engine needs: ring arithmetic,
/// divmod, gcd, powers and exact n-th roots.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : v;
    while (m) {
      mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
      m >>= 32;
    }
  }

  static BigInt from_decimal(const std::string& s) {
    BigInt r;
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    if (i == s.size()) throw Error("empty integer literal");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error("bad digit in integer literal");
      r = r.mul_small(10);
      r = r + BigInt(s[i] - '0');
    }
    if (sign < 0) r.sign_ = -r.sign_;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
      }
      std::size_t k = i + b.mag_.size();
      while (carry) {
        std::uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    if (r.mag_.empty()) r.sign_ = 0;
    return r;
  }

  /// Truncated quotient and remainder, remainder carries the dividend sign.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error("integer division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    if (b.mag_.size() == 1) {
      std::uint32_t d = b.mag_[0];
      std::vector<std::uint32_t> qm(a.mag_.size(), 0);
      std::uint64_t rem = 0;
      for (std::size_t i = a.mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a.mag_[i];
        qm[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      q.mag_ = std::move(qm);
      q.trim();
      q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
      r = BigInt(static_cast<long long>(rem));
      if (a.sign_ < 0) r.sign_ = -r.sign_;
      return;
    }
    // bit-wise long division on magnitudes
    std::vector<std::uint32_t> rem;
    std::vector<std::uint32_t> qm(a.mag_.size(), 0);
    for (std::size_t bit = a.mag_.size() * 32; bit-- > 0;) {
      shift_left_one(rem);
      if (a.mag_[bit / 32] & (1u << (bit % 32))) {
        if (rem.empty())
          rem.push_back(1);
        else
          rem[0] |= 1u;
      }
      if (cmp_mag(rem, b.mag_) >= 0) {
        rem = sub_mag(rem, b.mag_);
        qm[bit / 32] |= (1u << (bit % 32));
      }
    }
    q.mag_ = std::move(qm);
    q.trim();
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rem);
    r.trim();
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
      b.sign_ = b.mag_.empty() ? 0 : 1;
    }
    return a;
  }

  BigInt pow(unsigned long long e) const {
    BigInt base = *this, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Exact integer n-th root of a non-negative value: returns true and sets
  /// `root` iff root^n == *this.
  bool nth_root(unsigned n, BigInt& root) const {
    if (sign_ < 0) return false;
    if (is_zero()) {
      root = BigInt();
      return true;
    }
    double guess = std::pow(to_double(), 1.0 / n);
    long long g = static_cast<long long>(std::llround(guess));
    for (long long cand = std::max(1ll, g - 2); cand <= g + 2; ++cand) {
      BigInt c(cand);
      BigInt p = c.pow(n);
      if (p == *this) {
        root = c;
        return true;
      }
    }
    // large values: binary search (rare path)
    if (to_double() > 9e18) {
      BigInt lo(1), hi = *this;
      while (lo <= hi) {
        BigInt mid = (lo + hi) / BigInt(2);
        BigInt p = mid.pow(n);
        if (p == *this) {
          root = mid;
          return true;
        }
        if (p < *this)
          lo = mid + BigInt(1);
        else
          hi = mid - BigInt(1);
      }
    }
    return false;
  }

  double to_double() const {
    double v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
  }

  bool fits_longlong() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = magnitude_ull();
    return v <= 0x7fffffffffffffffull ||
           (sign_ < 0 && v == 0x8000000000000000ull);
  }
  long long to_longlong() const {
    unsigned long long v = magnitude_ull();
    return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
  }

  std::string str() const {
    if (is_zero()) return "0";
    BigInt t = abs();
    std::string out;
    while (!t.is_zero()) {
      BigInt q, r;
      divmod(t, BigInt(1000000000), q, r);
      unsigned long long chunk = r.magnitude_ull();
      std::string c = std::to_string(chunk);
      if (!q.is_zero()) c = std::string(9 - c.size(), '0') + c;
      out = c + out;
      t = q;
    }
    return sign_ < 0 ? "-" + out : out;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(sign_ + 2);
    for (auto w : mag_) h = h * 1000003u + w;
    return h;
  }

 private:
  unsigned long long magnitude_ull() const {
    unsigned long long v = 0;
    if (mag_.size() > 1) v = static_cast<unsigned long long>(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return v;
  }
  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }
  BigInt mul_small(std::uint32_t m) const {
    BigInt r;
    if (sign_ == 0 || m == 0) return r;
    std::uint64_t carry = 0;
    r.mag_.reserve(mag_.size() + 1);
    for (auto w : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(w) * m + carry;
      r.mag_.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
      carry = cur >> 32;
    }
    if (carry) r.mag_.push_back(static_cast<std::uint32_t>(carry));
    r.sign_ = sign_;
    return r;
  }
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      std::uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }
  // requires a >= b
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += 0x100000000ll;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  static void shift_left_one(std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (auto& w : v) {
      std::uint32_t nc = w >> 31;
      w = (w << 1) | carry;
      carry = nc;
    }
    if (carry) v.push_back(carry);
  }

  int sign_ = 0;
  std::vector<std::uint32_t> mag_;
};

/// Exact rational number, always normalized (positive denominator, gcd 1).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }
  explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_negative() const { return num_.is_negative(); }
  bool is_integer() const { return den_.is_one(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a < b || a == b;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// Exact integer power; negative exponents invert (zero base rejected).
  Rational pow_int(long long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw Error("zero raised to negative power");
      return Rational(0);
    }
    bool inv = e < 0;
    unsigned long long m = inv ? -static_cast<unsigned long long>(e) : e;
    Rational r(num_.pow(m), den_.pow(m));
    if (inv) r = Rational(1) / r;
    return r;
  }

  /// Floor of the rational as a BigInt.
  BigInt floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (num_.is_negative() && !r.is_zero()) q = q - BigInt(1);
    return q;
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  void normalize() {
    if (den_.is_zero()) throw Error("rational with zero denominator");
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_.is_negative()) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  BigInt num_, den_;
};

}  // namespace coqe

#endif  // COQE_RATIONAL_HPP
