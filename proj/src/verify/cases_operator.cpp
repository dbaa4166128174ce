#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

BigRat taylor_coeff(long n) { return BigRat(BigInt(n + 2), BigInt(n * n + 1)); }

// f(x,u) = sum_n u^C(n,2) a_n x^n, graded by the power of x.
RS taylor_target(const RatFunc& u, int order) {
  RS f(order);
  RatFunc x = V(Var::x);
  for (int n = 0; n <= order; ++n) f.set(n, RatFunc(taylor_coeff(n)) * ring_pow(u, c2(n)) * ring_pow(x, n));
  return f;
}

}  // namespace

void register_operator(std::vector<TheoremCase>& out) {
  add(out, "s3.operator_power", "3",
      "(T_a D)^k u^C(n,2) x^n = {n}!/{n-k}! u^C(n-k,2) x^(n-k), 0 <= k <= n, and 0 for k > n", RingReq::ratfunc,
      {Var::s, Var::t, Var::u},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc u = e(Var::u), x = V(Var::x);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          RatFunc f = ring_pow(u, c2(n)) * ring_pow(x, n);
          for (long k = 0; k <= n + 1; ++k) {
            r.push_back(f);
            f = shifted_derivative(*ctx, f, Var::x, u.inverse());
          }
        }
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc u = e(Var::u), x = V(Var::x);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          for (long k = 0; k <= n + 1; ++k) {
            r.push_back(k > n ? RatFunc(0)
                              : ctx->fib_factorial(n) / ctx->fib_factorial(n - k) * ring_pow(u, c2(n - k)) *
                                    ring_pow(x, n - k));
          }
        }
        return items(r);
      })
      .note = "holds with a = u^-1, the value used by the Taylor formula";

  add(out, "s3.taylor_formula", "3",
      "f(x (+)_{u,v} y) = sum_n v^C(n,2) y^n/{n}! (T_{u^-1} D)^n f(x,u)", RingReq::ratfunc,
      {Var::s, Var::t, Var::u, Var::v},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc x = V(Var::x), y = V(Var::y);
        RS r(e.order);
        for (int n = 0; n <= e.order; ++n) {
          r.set(n, RatFunc(taylor_coeff(n)) * binom_poly(*ctx, x, y, n, e(Var::u), e(Var::v)));
        }
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        return items(translation_apply(*ctx, taylor_target(e(Var::u), e.order), Var::x, V(Var::y), e(Var::u),
                                       e(Var::v), 0));
      })
      .note = "a_n = (n+2)/(n^2+1); graded by total degree in (x, y)";

  add(out, "s3.translation_power", "3", "e(y T_{u^-1} D, v) u^C(alpha,2) x^alpha = (x (+)_{u,v} y)^(alpha)",
      RingReq::ratfunc, {Var::s, Var::t, Var::u, Var::v},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc u = e(Var::u), x = V(Var::x);
        Items r;
        for (long a : {2L, 3L, -1L, -2L}) {
          RS target = RS::constant(ring_pow(u, c2(a)) * ring_pow(x, a), e.order);
          append(r, items(translation_apply(*ctx, target, Var::x, V(Var::y), u, e(Var::v))));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : {2L, 3L, -1L, -2L}) {
          append(r, items(deformed_binom(*ctx, V(Var::x), V(Var::y), a, e(Var::u), e(Var::v), e.order)));
        }
        return r;
      })
      .note = "graded by the power of y";

  add(out, "s3.translation_exp", "3", "e(y T_{u^-1} D, v) exp(x,u) = exp(x (+)_{u,v} y)", RingReq::ratfunc,
      {Var::s, Var::t, Var::u, Var::v},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc u = e(Var::u);
        return items(translation_apply(*ctx, deformed_exp(*ctx, V(Var::x), u, e.order), Var::x, V(Var::y), u,
                                       e(Var::v), 0));
      },
      [](const Env& e) {
        auto ctx = e.st();
        RS r(e.order);
        for (int m = 0; m <= e.order; ++m) {
          r.set(m, binom_poly(*ctx, V(Var::x), V(Var::y), m, e(Var::u), e(Var::v)) / ctx->fib_factorial(m));
        }
        return items(r);
      })
      .note = "the printed operator subscript T_{^-1} is read as T_{u^-1}; graded by total degree in (x, y)";

  add(out, "s3.translation_at_zero", "3", "e(0 T_{u^-1} D, v) f(x,u) = f(x,u)", RingReq::ratfunc,
      {Var::s, Var::t, Var::u, Var::v},
      [](const Env& e) {
        auto ctx = e.st();
        RS f = taylor_target(e(Var::u), e.order);
        return items(translation_apply(*ctx, f, Var::x, RatFunc(0), e(Var::u), e(Var::v), 0));
      },
      [](const Env& e) { return items(taylor_target(e(Var::u), e.order)); });
}

}  // namespace stcalc::verify::cases
