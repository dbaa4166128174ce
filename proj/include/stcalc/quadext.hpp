#pragma once

#include <ostream>
#include <memory>
#include <string>

#include "stcalc/ratfunc.hpp"

namespace stcalc {

// a + b*delta with delta^2 = disc. Elements with b = 0 may omit the
// discriminant and combine with any extension.
class QuadExt {
 public:
  using Disc = std::shared_ptr<const RatFunc>;

  QuadExt() = default;
  QuadExt(long c) : a_(c) {}  // NOLINT(google-explicit-constructor)
  QuadExt(RatFunc a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(RatFunc a, RatFunc b, Disc disc);
  static QuadExt delta(Disc disc) { return QuadExt(RatFunc(0), RatFunc(1), std::move(disc)); }

  const RatFunc& symmetric_part() const { return a_; }
  const RatFunc& delta_part() const { return b_; }
  const Disc& disc() const { return disc_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conj() const;
  RatFunc norm() const;
  QuadExt inverse() const;
  QuadExt pow(long k) const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a);

  std::string to_string() const;

  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  void absorb(const Disc& other);

  RatFunc a_;
  RatFunc b_;
  Disc disc_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace stcalc
