#pragma once

#include <ostream>
#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace stcalc {

using BigInt = mpz_class;

// Canonical rational: reduced, positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static BigRat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat inverse() const;
  BigRat pow(long k) const;
  BigRat abs() const { return BigRat(::abs(v_)); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }
  std::size_t hash() const;

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.v_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Exact rational square root when it exists.
bool rational_sqrt(const BigRat& x, BigRat& root);

inline std::ostream& operator<<(std::ostream& os, const BigRat& x) { return os << x.to_string(); }

}  // namespace stcalc
