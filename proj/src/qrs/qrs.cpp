#include "stcalc/qrs.hpp"

#include <sstream>

namespace stcalc {

RatFunc q_binom(long n, long k, const RatFunc& q) {
  if (k < 0) throw DomainError("q-binomial with negative lower index");
  if (n < 0) {
    long m = -n;
    RatFunc r = ring_pow(q, -m * k - k * (k - 1) / 2) * q_binom(m + k - 1, k, q);
    return k % 2 == 0 ? r : -r;
  }
  if (k > n) return RatFunc(0);
  RatFunc qs = RatFunc::var(Var::q);
  RatFunc sym = q_pochhammer(qs, qs, n) / (q_pochhammer(qs, qs, k) * q_pochhammer(qs, qs, n - k));
  // Evaluating the polynomial also covers roots of unity, where the
  // Pochhammer quotient is 0/0.
  if (q == RatFunc::var(Var::q)) return sym;
  return sym.substitute(Var::q, q);
}

RSPoly rogers_szego_r(long n, const RatFunc& q) {
  if (n < 0) throw DomainError("Rogers-Szego index must be nonnegative");
  RSPoly p;
  p.n = n;
  for (long k = 0; k <= n; ++k) p.coeffs.push_back(q_binom(n, k, q));
  return p;
}

RatFunc RSPoly::evaluate(const RatFunc& x, const RatFunc& b) const {
  RatFunc r;
  for (long k = 0; k <= n; ++k) r += coeffs[k] * b.pow(n - k) * x.pow(k);
  return r;
}

namespace {

// Ascending-power rendering for coefficients, e.g. 1+q+2*q^2.
std::string ascending(const RatFunc& c) {
  if (!c.is_polynomial()) return c.to_string();
  const auto& terms = c.num().terms();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, coef] = *it;
    BigRat mag = coef.abs();
    if (out.empty()) {
      if (coef.sign() < 0) out += "-";
    } else {
      out += coef.sign() < 0 ? "-" : "+";
    }
    if (m.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += m.to_string();
    }
  }
  return out.empty() ? "0" : out;
}

std::string power(const char* v, long e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return std::string(v) + "^" + std::to_string(e);
}

}  // namespace

std::string RSPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k <= n; ++k) {
    const RatFunc& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string mono = power("b", n - k);
    std::string xp = power("x", k);
    if (!mono.empty() && !xp.empty()) mono += "*";
    mono += xp;
    std::string coef;
    if (c.is_one()) {
      coef = mono.empty() ? "1" : "";
    } else if (c.is_constant()) {
      coef = c.constant_value().to_string() + (mono.empty() ? "" : "*");
    } else {
      coef = "(" + ascending(c) + ")" + (mono.empty() ? "" : "*");
    }
    if (!first) os << " + ";
    first = false;
    os << coef << mono;
  }
  return first ? "0" : os.str();
}

RatFunc rogers_szego_h(long n, const RatFunc& x, const RatFunc& q) {
  return rogers_szego_r(n, q).evaluate(x, RatFunc(1));
}

RatFunc q_difference_in(const RatFunc& p, Var x, const RatFunc& q) {
  std::map<int, RatFunc> out;
  for (const auto& [j, c] : p.laurent_in(x)) {
    if (j == 0) continue;
    out.emplace(j - 1, c * (RatFunc(1) - ring_pow(q, j)));
  }
  return RatFunc::from_laurent(x, out);
}

RatFunc q_exp_operator(const RatFunc& b, const RatFunc& p, Var x, const RatFunc& q) {
  for (const auto& [j, c] : p.laurent_in(x)) {
    if (j < 0) throw DomainError("q-exponential operator needs a polynomial in " +
                                 std::string(var_name(x)));
  }
  RatFunc sum = p, cur = p, bk(1), qq(1);
  for (long k = 1; !cur.is_zero(); ++k) {
    cur = q_difference_in(cur, x, q);
    if (cur.is_zero()) break;
    bk = bk * b;
    qq = qq * (RatFunc(1) - ring_pow(q, k));
    sum += bk * cur / qq;
  }
  return sum;
}

Series<RatFunc> q_exp_operator(const RatFunc& b, const Series<RatFunc>& target, Var x,
                               const RatFunc& q) {
  return target.map([&](const RatFunc& c) { return q_exp_operator(b, c, x, q); });
}

}  // namespace stcalc
