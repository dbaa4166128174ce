#include "stcalc/deformed.hpp"

#include "stcalc/qrs.hpp"

namespace stcalc {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

int valuation(const RSeries& s) {
  for (int i = 0; i <= s.order(); ++i) {
    if (!s[i].is_zero()) return i;
  }
  return s.order() + 1;
}

// sum_j {k,j} a^C(k-j,2) b^C(j,2) A^(k-j) B^j, homogeneous of degree k.
RatFunc binom_poly(const STContext& ctx, const RatFunc& A, const RatFunc& B, long k,
                   const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  for (long j = 0; j <= k; ++j) {
    r += ctx.binom(k, j) * ring_pow(a, choose2(k - j)) * ring_pow(b, choose2(j)) *
         ring_pow(A, k - j) * ring_pow(B, j);
  }
  return r;
}

}  // namespace

RSeries deformed_exp(const STContext& ctx, const RatFunc& z, const RatFunc& u, int order) {
  RSeries r(order);
  if (u.is_zero()) {
    r.set(0, RatFunc(1));
    if (order >= 1) r.set(1, z);
    return r;
  }
  for (int n = 0; n <= order; ++n) {
    r.set(n, ring_pow(u, choose2(n)) * ring_pow(z, n) / ctx.fib_factorial(n));
  }
  return r;
}

RSeries binom_expand(const STContext& ctx, const RatFunc& x, long alpha, const RatFunc& u,
                     const RatFunc& v, int order, const std::function<RSeries(long)>& ypow) {
  if (alpha < 0 && x.is_zero()) throw NotAUnit("binomial series with negative exponent needs x != 0");
  RSeries r(order);
  long top = alpha >= 0 ? alpha : order;
  for (long n = 0; n <= top; ++n) {
    RSeries y = ypow(n);
    if (alpha < 0 && valuation(y) < n) {
      throw DomainError("argument power " + std::to_string(n) + " has too small valuation");
    }
    RatFunc c = ctx.binom(alpha, n) * ring_pow(u, choose2(alpha - n)) * ring_pow(v, choose2(n)) *
                ring_pow(x, alpha - n);
    if (c.is_zero()) continue;
    r += c * y;
  }
  return r;
}

RSeries deformed_binom(const STContext& ctx, const RatFunc& x, const RatFunc& y, long alpha,
                       const RatFunc& u, const RatFunc& v, int order) {
  return binom_expand(ctx, x, alpha, u, v, order, [&](long n) {
    return RSeries::monomial(ring_pow(y, n), static_cast<int>(n), order);
  });
}

RSeries deformed_binom_minus(const STContext& ctx, const RatFunc& x, const RatFunc& y, long alpha,
                             const RatFunc& u, const RatFunc& v, int order) {
  return deformed_binom(ctx, x, -y, alpha, u, v, order);
}

RSeries trinom_right(const STContext& ctx, const RatFunc& L, const RatFunc& M, const RatFunc& R,
                     const RatFunc& p1, const RatFunc& p2, const RatFunc& p3, long alpha, int order,
                     const RatFunc& pv) {
  return binom_expand(ctx, L, alpha, p1, pv, order, [&](long k) {
    return RSeries::monomial(binom_poly(ctx, M, R, k, p2, p3), static_cast<int>(k), order);
  });
}

RSeries trinom_left(const STContext& ctx, const RatFunc& L, const RatFunc& M, const RatFunc& R,
                    const RatFunc& p1, const RatFunc& p2, const RatFunc& p3, long alpha, int order) {
  RSeries r(order);
  long top = alpha >= 0 ? alpha : order;
  for (long k = 0; k <= top && k <= order; ++k) {
    RatFunc c = ctx.binom(alpha, k) * ring_pow(p3, choose2(k)) * ring_pow(R, k);
    if (c.is_zero()) continue;
    RSeries inner = deformed_binom(ctx, L, M, alpha - k, p1, p2, order - static_cast<int>(k));
    for (int j = 0; j <= inner.order(); ++j) {
      if (inner[j].is_zero()) continue;
      r.set(j + static_cast<int>(k), r[j + static_cast<int>(k)] + c * inner[j]);
    }
  }
  return r;
}

RSeries deformed_trinom(const STContext& ctx, const RatFunc& x, const RatFunc& y, const RatFunc& z,
                        const DeformParams& p, long alpha, int order) {
  return trinom_right(ctx, x, y, z, p.u, p.v, p.w, alpha, order);
}

RatFunc shifted_derivative(const STContext& ctx, const RatFunc& f, Var var, const RatFunc& uinv) {
  std::map<int, RatFunc> out;
  for (const auto& [j, c] : f.laurent_in(var)) {
    if (j == 0) continue;
    RatFunc d = c * ctx.fib(j) * ring_pow(uinv, j - 1);
    if (!d.is_zero()) out.emplace(j - 1, d);
  }
  return RatFunc::from_laurent(var, out);
}

RSeries translation_apply(const STContext& ctx, const RSeries& target, Var var, const RatFunc& y,
                          const RatFunc& u, const RatFunc& v, int degree_shift) {
  if (u.is_zero()) throw NotAUnit("translation operator needs u != 0");
  if (degree_shift < 0) throw DomainError("negative degree shift");
  RatFunc uinv = u.inverse();
  int order = target.order();
  RSeries out(order);
  constexpr long kMaxTerms = 4096;
  for (int m = 0; m <= order; ++m) {
    RatFunc cur = target[m];
    for (long n = 0; !cur.is_zero(); ++n) {
      int dest = m + static_cast<int>(n) * degree_shift;
      if (dest > order) break;
      if (n > kMaxTerms) throw DomainError("translation operator did not terminate");
      RatFunc scale = ring_pow(v, choose2(n)) * ring_pow(y, n) / ctx.fib_factorial(n);
      out.set(dest, out[dest] + scale * cur);
      cur = shifted_derivative(ctx, cur, var, uinv);
    }
  }
  return out;
}

RSeries theta_partial(const RatFunc& q, int order) {
  RSeries r(order);
  for (int n = 0; n <= order; ++n) r.set(n, ring_pow(q, choose2(n)));
  return r;
}

RSeries theta_deriv(const STContext& ctx, long n, ThetaMode mode, const RatFunc& q, int order) {
  if (n < 0) throw DomainError("negative derivative order");
  if (n > order) throw DomainError("derivative order exceeds truncation order");
  int out_order = order - static_cast<int>(n);
  if (mode == ThetaMode::direct) {
    RSeries f = theta_partial(q, order);
    for (long k = 0; k < n; ++k) f = st_derive(f, ctx);
    return f;
  }
  RatFunc v = -(ctx.t() * q);
  RatFunc y = ring_pow(v, n) * ctx.t();
  RSeries b = deformed_binom(ctx, RatFunc(1), y, -n - 1, RatFunc(1), v, out_order);
  return (ctx.fib_factorial(n) * ring_pow(q, choose2(n))) * b;
}

}  // namespace stcalc
