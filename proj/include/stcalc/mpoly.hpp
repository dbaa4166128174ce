#pragma once

#include <ostream>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stcalc/bigrat.hpp"
#include "stcalc/variables.hpp"

namespace stcalc {

class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kNumVars>;

  Monomial() = default;
  static Monomial of(Var v, unsigned power = 1);

  unsigned degree() const { return degree_; }
  unsigned exponent(Var v) const { return exp_[static_cast<std::size_t>(v)]; }
  const Exponents& exponents() const { return exp_; }
  bool is_one() const { return degree_ == 0; }
  VarSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o).
  Monomial operator/(const Monomial& o) const;
  Monomial without(Var v) const;
  Monomial restricted(VarSet vars) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }
  // Graded lexicographic order with s > t > q > ... > b.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    return a.exp_ <=> b.exp_;
  }

 private:
  Exponents exp_{};
  std::uint32_t degree_ = 0;
};

// Sparse polynomial with rational coefficients, terms sorted by decreasing
// monomial order.
class MPoly {
 public:
  using Term = std::pair<Monomial, BigRat>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  static MPoly var(Var v, unsigned power = 1);
  static MPoly monomial(const Monomial& m, const BigRat& c);
  // Terms need not be sorted or combined.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  BigRat constant_term() const;
  // Precondition: is_constant().
  BigRat constant_value() const;
  const Term& leading() const { return terms_.front(); }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  VarSet variables() const;
  Monomial monomial_content() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);

  MPoly scaled(const BigRat& c) const;
  MPoly times_monomial(const Monomial& m) const;
  // Precondition: m divides every term.
  MPoly div_monomial(const Monomial& m) const;
  MPoly pow(unsigned k) const;

  std::optional<MPoly> divide_exact(const MPoly& d) const;

  // Leading coefficient scaled to 1 (zero stays zero).
  MPoly monic() const;
  BigRat leading_coefficient() const { return is_zero() ? BigRat(0) : terms_.front().second; }

  // Decompose by powers of v: result[k] is the coefficient of v^k.
  std::vector<MPoly> coefficients_in(Var v) const;
  // Group terms by their exponents in `vars`; each group as a polynomial in
  // the remaining variables.
  std::vector<MPoly> coefficients_wrt(VarSet vars) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);

  MPoly substitute(Var v, const MPoly& value) const;
  // Substitutes constants for the listed variables.
  MPoly evaluate(const std::map<Var, BigRat>& values) const;
  MPoly derivative(Var v) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void normalize();
  std::vector<Term> terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

inline std::ostream& operator<<(std::ostream& os, const MPoly& x) { return os << x.to_string(); }

}  // namespace stcalc
