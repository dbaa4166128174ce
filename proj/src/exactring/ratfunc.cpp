#include "stcalc/ratfunc.hpp"

#include "stcalc/errors.hpp"

namespace stcalc {

namespace {

MPoly div_exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw IntegralityError("expected exact division");
  return *q;
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_constant()) {
    BigRat c = den_.constant_value();
    if (!c.is_one()) num_ = num_.scaled(c.inverse());
    den_ = MPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    Monomial g = Monomial::gcd(num_.monomial_content(), den_.leading().first);
    BigRat c = den_.leading().second;
    num_ = num_.div_monomial(g).scaled(c.inverse());
    den_ = MPoly::monomial(den_.leading().first / g, BigRat(1));
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  BigRat lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    BigRat inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

BigRat RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
  return num_.constant_term();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  MPoly n = den_, d = num_;
  BigRat lc = d.leading_coefficient();
  if (!lc.is_one()) {
    BigRat inv = lc.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return RatFunc(Raw{}, std::move(n), std::move(d));
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RatFunc(1);
  return RatFunc(Raw{}, num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) reduce();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  // Henrici: with g = gcd(b, d), a/b + c/d = (a*d' + c*b') / (b'*d'*g).
  MPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
  }
  MPoly b1 = div_exact(den_, g), d1 = div_exact(o.den_, g);
  MPoly n = num_ * d1 + o.num_ * b1;
  num_ = std::move(n);
  den_ = b1 * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ = num_.scaled(o.constant_value());
    return *this;
  }
  if (is_constant()) {
    BigRat c = constant_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  MPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MPoly a = g1.is_one() ? num_ : div_exact(num_, g1);
  MPoly d = g1.is_one() ? o.den_ : div_exact(o.den_, g1);
  MPoly c = g2.is_one() ? o.num_ : div_exact(o.num_, g2);
  MPoly b = g2.is_one() ? den_ : div_exact(den_, g2);
  num_ = a * c;
  den_ = b * d;
  BigRat lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    BigRat inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) { return RatFunc(RatFunc::Raw{}, -a.num_, a.den_); }

bool RatFunc::is_laurent_in(Var v) const {
  if (den_.degree(v) == 0) return true;
  unsigned k = den_.min_degree(v);
  return k == den_.degree(v);
}

std::map<int, RatFunc> RatFunc::laurent_in(Var v) const {
  unsigned k = den_.min_degree(v);
  if (den_.degree(v) != k) {
    throw DomainError("not a Laurent polynomial in " + std::string(var_name(v)) + ": " + to_string());
  }
  MPoly rest = den_.div_monomial(Monomial::of(v, k));
  std::map<int, RatFunc> out;
  auto coeffs = num_.coefficients_in(v);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    out.emplace(static_cast<int>(j) - static_cast<int>(k), RatFunc(coeffs[j], rest));
  }
  return out;
}

RatFunc RatFunc::from_laurent(Var v, const std::map<int, RatFunc>& terms) {
  RatFunc r;
  RatFunc x = RatFunc::var(v);
  for (const auto& [e, c] : terms) r += c * x.pow(e);
  return r;
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
  if (((num_.variables() | den_.variables()) & var_bit(v)) == 0) return *this;
  auto horner = [&](const MPoly& p) {
    auto coeffs = p.coefficients_in(v);
    RatFunc r(coeffs.back());
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) r = r * value + RatFunc(coeffs[k]);
    return r;
  };
  return horner(num_) / horner(den_);
}

RatFunc RatFunc::evaluate(const std::map<Var, BigRat>& values) const {
  MPoly d = den_.evaluate(values);
  if (d.is_zero()) throw PoleError("denominator " + den_.to_string() + " vanishes at evaluation point");
  return RatFunc(num_.evaluate(values), d);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace stcalc
