#include <algorithm>
#include <bit>

#include "stcalc/errors.hpp"
#include "stcalc/mpoly.hpp"

namespace stcalc {

namespace {

using Dense = std::vector<BigRat>;
using UPoly = std::vector<MPoly>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense to_dense(const MPoly& p, Var v) {
  Dense d(p.degree(v) + 1);
  for (const auto& [m, c] : p.terms()) d[m.exponent(v)] = c;
  return d;
}

MPoly from_dense(const Dense& d, Var v) {
  std::vector<MPoly::Term> terms;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (!d[k].is_zero()) terms.emplace_back(Monomial::of(v, static_cast<unsigned>(k)), d[k]);
  }
  return MPoly::from_terms(std::move(terms));
}

void make_monic(Dense& a) {
  BigRat inv = a.back().inverse();
  for (auto& c : a) c *= inv;
}

Dense dense_rem(Dense a, const Dense& b) {
  const BigRat& lb = b.back();
  while (a.size() >= b.size()) {
    BigRat f = a.back() / lb;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

MPoly univariate_gcd(const MPoly& pa, const MPoly& pb, Var v) {
  Dense a = to_dense(pa, v), b = to_dense(pb, v);
  if (a.size() < b.size()) std::swap(a, b);
  make_monic(a);
  make_monic(b);
  while (!b.empty()) {
    Dense r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) make_monic(b);
  }
  return from_dense(a, v);
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw IntegralityError("internal gcd division failed");
  return *q;
}

MPoly content_of(const UPoly& coeffs) {
  MPoly g;
  for (const auto& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return MPoly(1);
  }
  return g;
}

UPoly primitive(UPoly a, MPoly* content = nullptr) {
  MPoly c = content_of(a);
  if (content) *content = c;
  if (!c.is_one()) {
    for (auto& x : a) x = exact_div(x, c);
  }
  return a;
}

UPoly pseudo_rem(UPoly a, const UPoly& b) {
  const MPoly& lb = b.back();
  while (a.size() >= b.size()) {
    MPoly la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = x * lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= la * b[j];
    trim(a);
  }
  return a;
}

MPoly gcd_prs(const MPoly& pa, const MPoly& pb, Var v) {
  UPoly a = pa.coefficients_in(v), b = pb.coefficients_in(v);
  if (a.size() < b.size()) std::swap(a, b);
  MPoly ca, cb;
  a = primitive(std::move(a), &ca);
  b = primitive(std::move(b), &cb);
  MPoly c = gcd(ca, cb);
  UPoly g;
  while (true) {
    UPoly r = pseudo_rem(a, b);
    if (r.empty()) {
      g = std::move(b);
      break;
    }
    if (r.size() == 1) {
      g = UPoly{MPoly(1)};
      break;
    }
    a = std::move(b);
    b = primitive(std::move(r));
  }
  g = primitive(std::move(g));
  return (c * MPoly::from_coefficients(v, g)).monic();
}

MPoly gcd_core(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (b.total_degree() <= a.total_degree()) {
    if (a.divide_exact(b)) return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }
  VarSet va = a.variables(), vb = b.variables();
  VarSet common = va & vb;
  if (common == 0) return MPoly(1);
  if (va != common) {
    MPoly g = b;
    for (const auto& c : a.coefficients_wrt(static_cast<VarSet>(va & ~common))) {
      g = gcd(g, c);
      if (g.is_one()) break;
    }
    return g;
  }
  if (vb != common) return gcd_core(b, a);
  if (std::popcount(static_cast<unsigned>(common)) == 1) {
    auto v = static_cast<Var>(std::countr_zero(static_cast<unsigned>(common)));
    return univariate_gcd(a, b, v);
  }
  Var main = Var::s;
  unsigned best = ~0u;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (!((common >> i) & 1u)) continue;
    auto v = static_cast<Var>(i);
    unsigned d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  return gcd_prs(a, b, main);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return a.monic();
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  MPoly core = gcd_core(a.div_monomial(ma), b.div_monomial(mb));
  return core.times_monomial(mg).monic();
}

}  // namespace stcalc
