#include "stcalc/errors.hpp"
#include "stcalc/stcore.hpp"

namespace stcalc {

RatFunc fib(const STContext& ctx, long n) { return ctx.fib(n); }

RatFunc fib_backward(const STContext& ctx, long n) {
  if (n >= 0) return ctx.fib(n);
  RatFunc hi = RatFunc(1), lo = RatFunc(0);  // fib(1), fib(0)
  RatFunc tinv = ctx.t().inverse();
  for (long k = -1; k >= n; --k) {
    RatFunc next = (hi - ctx.s() * lo) * tinv;
    hi = lo;
    lo = next;
  }
  return lo;
}

RatFunc fib_confluent(const STContext& ctx, long n) {
  return RatFunc(n) * (ctx.s() * RatFunc(BigRat(1, 2))).pow(n - 1);
}

RatFunc fib_factorial(const STContext& ctx, long n) { return ctx.fib_factorial(n); }

RatFunc st_binom(const STContext& ctx, long alpha, long k) { return ctx.binom(alpha, k); }

RatFunc st_binom_product(const STContext& ctx, long alpha, long k) {
  if (k < 0) throw DomainError("Fibonomial with negative lower index");
  RatFunc num(1);
  for (long i = 0; i < k; ++i) num *= fib_backward(ctx, alpha - i);
  return num / ctx.fib_factorial(k);
}

QuadExt pascal_left(const STContext& ctx, long alpha, long k) {
  if (k < 1) throw DomainError("Pascal recurrence needs k >= 1");
  return ctx.phi_pow(k) * QuadExt(ctx.binom(alpha, k)) +
         ctx.phi_prime_pow(alpha + 1 - k) * QuadExt(ctx.binom(alpha, k - 1));
}

QuadExt pascal_right(const STContext& ctx, long alpha, long k) {
  if (k < 1) throw DomainError("Pascal recurrence needs k >= 1");
  return ctx.phi_prime_pow(k) * QuadExt(ctx.binom(alpha, k)) +
         ctx.phi_pow(alpha + 1 - k) * QuadExt(ctx.binom(alpha, k - 1));
}

RatFunc polytopic(const STContext& ctx, long n, long d) {
  if (n < 0 || d < 0) throw DomainError("polytopic number needs n >= 0 and d >= 0");
  if (d == 0) return RatFunc(1);
  return ctx.binom(n + d - 1, d);
}

}  // namespace stcalc
