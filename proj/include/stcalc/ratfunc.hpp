#pragma once

#include <ostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stcalc/mpoly.hpp"

namespace stcalc {

// Reduced fraction num/den with den monic in graded-lex order.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& num, const MPoly& den);
  static RatFunc var(Var v) { return RatFunc(MPoly::var(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  BigRat constant_value() const;
  VarSet variables() const { return static_cast<VarSet>(num_.variables() | den_.variables()); }

  RatFunc inverse() const;
  RatFunc pow(long k) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  // Laurent decomposition in v: requires den = (v-free) * v^k.
  std::map<int, RatFunc> laurent_in(Var v) const;
  static RatFunc from_laurent(Var v, const std::map<int, RatFunc>& terms);
  bool is_laurent_in(Var v) const;

  RatFunc substitute(Var v, const RatFunc& value) const;
  // Substitutes constants; throws PoleError if the denominator vanishes.
  RatFunc evaluate(const std::map<Var, BigRat>& values) const;

  std::size_t hash() const { return num_.hash() * 7919 ^ den_.hash(); }
  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Raw {};
  RatFunc(Raw, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  MPoly num_;
  MPoly den_{1};
};

inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

}  // namespace stcalc
