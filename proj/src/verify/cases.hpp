#pragma once

#include <vector>

#include "stcalc/qrs.hpp"
#include "stcalc/verify.hpp"

namespace stcalc::verify::cases {

using RS = Series<RatFunc>;
using QS = Series<QuadExt>;

inline long c2(long n) { return n * (n - 1) / 2; }
inline RatFunc V(Var v) { return RatFunc::var(v); }

// (1 (-)_{1,1} c Y)^(alpha) with Y_j = coeff(j) eps^j, so the result is
// sum_j {alpha,j} (-c)^j coeff(j) eps^j.
template <class F>
RS minus_binom(const STContext& ctx, long alpha, const RatFunc& c, int order, F coeff) {
  return binom_expand(ctx, RatFunc(1), alpha, RatFunc(1), RatFunc(1), order, [&](long j) {
    return RS::monomial(ring_pow(-c, j) * coeff(j), static_cast<int>(j), order);
  });
}

// Sum of the coefficients of a homogeneous binomial expansion:
// (a (+)_{u,v} b)^(n) for n >= 0 as a single polynomial.
RatFunc binom_poly(const STContext& ctx, const RatFunc& a, const RatFunc& b, long n,
                   const RatFunc& u = RatFunc(1), const RatFunc& v = RatFunc(1));

// p(x) -> p(x) - p(qx) / x repeated k times, with q the given base.
RatFunc q_difference_pow(const RatFunc& p, Var x, const RatFunc& q, long k);

QS lift(const RS& f);

inline TheoremCase& add(std::vector<TheoremCase>& out, std::string id, std::string section,
                        std::string citation, RingReq ring, std::vector<Var> params, Builder lhs,
                        Builder rhs) {
  TheoremCase c;
  c.id = std::move(id);
  c.section = std::move(section);
  c.citation = std::move(citation);
  c.ring = ring;
  c.params = std::move(params);
  if (c.params.empty()) c.policy = Policy::fixed;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  out.push_back(std::move(c));
  return out.back();
}

inline TheoremCase& printed_form(TheoremCase& c, std::string note) {
  c.expect = Expectation::refuted;
  c.note = std::move(note);
  return c;
}

inline Items ints(const std::vector<long>& v) {
  Items r;
  for (long x : v) r.emplace_back(BigRat(x));
  return r;
}

void register_intro(std::vector<TheoremCase>& out);
void register_derivative(std::vector<TheoremCase>& out);
void register_operator(std::vector<TheoremCase>& out);
void register_trinomial(std::vector<TheoremCase>& out);
void register_rogers(std::vector<TheoremCase>& out);
void register_polytopic(std::vector<TheoremCase>& out);
void register_generating(std::vector<TheoremCase>& out);
void register_products(std::vector<TheoremCase>& out);

}  // namespace stcalc::verify::cases
