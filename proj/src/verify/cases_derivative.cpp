#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

QS poly_f(int order) {
  QS f(order);
  for (int k = 0; k <= order; ++k) f.set(k, QuadExt(k + 1));
  return f;
}

QS poly_g(int order) {
  QS g(order);
  for (int k = 0; k <= order; ++k) g.set(k, QuadExt(k % 2 ? -(k * k + 1) : k * k + 1));
  return g;
}

// D_{s,t} acting on x inside each coefficient; slot n moves to n - drop.
RS derive_x(const STContext& ctx, const RS& f, int drop) {
  RS r(f.order() - drop);
  for (int n = drop; n <= f.order(); ++n) {
    r.set(n - drop, shifted_derivative(ctx, f[n], Var::x, RatFunc(1)));
  }
  return r;
}

QS geometric_derivative_rhs(const STContext& ctx, long n, int order) {
  std::vector<QuadExt> factors;
  for (long k = 0; k <= n; ++k) factors.push_back(ctx.phi_pow(n) * ctx.qhat().pow(k));
  return QuadExt(ctx.fib_factorial(n)) * product_linear(factors, order).reciprocal();
}

const std::vector<long> kAlphas = {3, 2, -1, -2};

}  // namespace

void register_derivative(std::vector<TheoremCase>& out) {
  const std::vector<Var> st = {Var::s, Var::t};

  add(out, "s2.product_rule_phi", "2", "D(fg) = f(phi x) Dg + g(phi' x) Df", RingReq::quadext, st,
      [](const Env& e) {
        auto ctx = e.st();
        return items(st_derive(poly_f(e.order) * poly_g(e.order), *ctx));
      },
      [](const Env& e) {
        auto ctx = e.st();
        QS f = poly_f(e.order), g = poly_g(e.order);
        return items(f.scale_arg(ctx->phi()) * st_derive(g, *ctx) +
                     g.scale_arg(ctx->phi_prime()) * st_derive(f, *ctx));
      });
  add(out, "s2.product_rule_phiprime", "2", "D(fg) = f(phi' x) Dg + g(phi x) Df", RingReq::quadext, st,
      [](const Env& e) {
        auto ctx = e.st();
        return items(st_derive(poly_f(e.order) * poly_g(e.order), *ctx));
      },
      [](const Env& e) {
        auto ctx = e.st();
        QS f = poly_f(e.order), g = poly_g(e.order);
        return items(f.scale_arg(ctx->phi_prime()) * st_derive(g, *ctx) +
                     g.scale_arg(ctx->phi()) * st_derive(f, *ctx));
      });

  auto quotient = [](ContextPtr ctx, const QS& f, const QS& g, bool use_phi) {
    QuadExt a = use_phi ? ctx->phi() : ctx->phi_prime();
    QS num = g.scale_arg(a) * st_derive(f, *ctx) - f.scale_arg(a) * st_derive(g, *ctx);
    return num * (g.scale_arg(ctx->phi()) * g.scale_arg(ctx->phi_prime())).reciprocal();
  };
  for (bool use_phi : {true, false}) {
    add(out, use_phi ? "s2.quotient_rule_phi" : "s2.quotient_rule_phiprime", "2",
        use_phi ? "D(f/g) = (g(phi x) Df - f(phi x) Dg) / (g(phi x) g(phi' x))"
                : "D(f/g) = (g(phi' x) Df - f(phi' x) Dg) / (g(phi x) g(phi' x))",
        RingReq::quadext, st,
        [](const Env& e) {
          auto ctx = e.st();
          return items(st_derive(poly_f(e.order) * poly_g(e.order).reciprocal(), *ctx));
        },
        [quotient, use_phi](const Env& e) {
          return items(quotient(e.st(), poly_f(e.order), poly_g(e.order), use_phi));
        });
  }

  add(out, "s2.theorem1", "2", "D^n (1/(1-x)) = {n}! / (phi^n x; q)_{n+1}, q = phi'/phi", RingReq::quadext, st,
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        QS f = lift(RS::geometric(e.order));
        for (long n = 1; n <= std::min(6, e.order - 1); ++n) {
          f = st_derive(f, *ctx);
          append(r, items(f));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 1; n <= std::min(6, e.order - 1); ++n) {
          append(r, items(geometric_derivative_rhs(*ctx, n, e.order - static_cast<int>(n))));
        }
        return r;
      });

  add(out, "s2.theta_binomial", "2", "Theta_0(x,q) = (1 (+)_{1,-tq} tx)^(-1)", RingReq::ratfunc,
      {Var::s, Var::t, Var::q}, [](const Env& e) { return items(theta_partial(e(Var::q), e.order)); },
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc t = e(Var::t);
        return items(deformed_binom(*ctx, RatFunc(1), t, -1, RatFunc(1), -(t * e(Var::q)), e.order));
      });

  add(out, "s2.theorem4", "2", "Theta_0^(n)(x,q) = {n}! q^C(n,2) (1 (+)_{1,-tq} (-tq)^n tx)^(-n-1)",
      RingReq::ratfunc, {Var::s, Var::t, Var::q},
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 0; n <= 4; ++n) append(r, items(theta_deriv(*ctx, n, ThetaMode::direct, e(Var::q), e.order)));
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 0; n <= 4; ++n) append(r, items(theta_deriv(*ctx, n, ThetaMode::closed, e(Var::q), e.order)));
        return r;
      })
      .note = "repeated D_{s,t} on the partial theta series against the closed binomial form";

  add(out, "s2.theta_at_q_one", "2", "Theta_0^(n)(x,1) = {n}! / (phi^n x; q)_{n+1}", RingReq::quadext, st,
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 1; n <= 4; ++n) {
          append(r, items(lift(theta_deriv(*ctx, n, ThetaMode::direct, RatFunc(1), e.order))));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 1; n <= 4; ++n) {
          append(r, items(geometric_derivative_rhs(*ctx, n, e.order - static_cast<int>(n))));
        }
        return r;
      });

  const std::vector<Var> stuv = {Var::s, Var::t, Var::u, Var::v};
  const RatFunc x = V(Var::x), y = V(Var::y);

  add(out, "s2.binomial_derivative_first", "2", "D (x (+)_{u,v} a)^(alpha) = {alpha} (ux (+)_{u,v} a)^(alpha-1)",
      RingReq::ratfunc, stuv,
      [x, y](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : kAlphas) {
          append(r, items(derive_x(*ctx, deformed_binom(*ctx, x, y, a, e(Var::u), e(Var::v), e.order), 0)));
        }
        return r;
      },
      [x, y](const Env& e) {
        auto ctx = e.st();
        RatFunc u = e(Var::u);
        Items r;
        for (long a : kAlphas) append(r, items(ctx->fib(a) * deformed_binom(*ctx, u * x, y, a - 1, u, e(Var::v), e.order)));
        return r;
      })
      .note = "a = y graded; D acts on x";

  add(out, "s2.binomial_derivative_second", "2", "D (a (+)_{u,v} x)^(alpha) = {alpha} (a (+)_{u,v} vx)^(alpha-1)",
      RingReq::ratfunc, stuv,
      [x, y](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : kAlphas) {
          append(r, items(derive_x(*ctx, deformed_binom(*ctx, y, x, a, e(Var::u), e(Var::v), e.order), 1)));
        }
        return r;
      },
      [x, y](const Env& e) {
        auto ctx = e.st();
        RatFunc v = e(Var::v);
        Items r;
        for (long a : kAlphas) {
          append(r, items(ctx->fib(a) * deformed_binom(*ctx, y, v * x, a - 1, e(Var::u), v, e.order - 1)));
        }
        return r;
      })
      .note = "x graded; a = y";

  auto minus_lhs = [x, y](const Env& e) {
    auto ctx = e.st();
    Items r;
    for (long a : {3L, -2L}) {
      append(r, items(derive_x(*ctx, deformed_binom_minus(*ctx, y, x, a, e(Var::u), e(Var::v), e.order), 1)));
    }
    return r;
  };
  auto minus_rhs = [x, y](bool corrected) {
    return [x, y, corrected](const Env& e) {
      auto ctx = e.st();
      RatFunc v = e(Var::v);
      Items r;
      for (long a : {3L, -2L}) {
        RS b = corrected ? deformed_binom_minus(*ctx, y, v * x, a - 1, e(Var::u), v, e.order - 1)
                         : deformed_binom(*ctx, y, v * x, a - 1, e(Var::u), v, e.order - 1);
        append(r, items(-ctx->fib(a) * b));
      }
      return r;
    };
  };
  printed_form(add(out, "s2.binomial_derivative_minus.printed", "2",
                   "D (a (-)_{u,v} x)^(alpha) = -{alpha} (a (+)_{u,v} vx)^(alpha-1)", RingReq::ratfunc, stuv,
                   minus_lhs, minus_rhs(false)),
               "the right side needs (-) in place of (+)");
  add(out, "s2.binomial_derivative_minus.corrected", "2",
      "D (a (-)_{u,v} x)^(alpha) = -{alpha} (a (-)_{u,v} vx)^(alpha-1)", RingReq::ratfunc, stuv, minus_lhs,
      minus_rhs(true));

  add(out, "s2.binomial_derivative_iterated", "2",
      "D^k (a (+)_{u,v} x)^(alpha) = v^C(k,2) {k}! {alpha,k} (a (+)_{u,v} v^k x)^(alpha-k)", RingReq::ratfunc,
      stuv,
      [x, y](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : {4L, -1L}) {
          for (int k : {2, 3}) {
            RS f = deformed_binom(*ctx, y, x, a, e(Var::u), e(Var::v), e.order);
            for (int i = 0; i < k; ++i) f = derive_x(*ctx, f, 1);
            append(r, items(f));
          }
        }
        return r;
      },
      [x, y](const Env& e) {
        auto ctx = e.st();
        RatFunc v = e(Var::v);
        Items r;
        for (long a : {4L, -1L}) {
          for (int k : {2, 3}) {
            RatFunc c = ring_pow(v, c2(k)) * ctx->fib_factorial(k) * ctx->binom(a, k);
            append(r, items(c * deformed_binom(*ctx, y, ring_pow(v, k) * x, a - k, e(Var::u), v, e.order - k)));
          }
        }
        return r;
      });
}

}  // namespace stcalc::verify::cases
