#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

RatFunc q_factorial(const RatFunc& q, long d) {
  RatFunc r(1);
  for (long k = 1; k <= d; ++k) r *= (RatFunc(1) - ring_pow(q, k)) / (RatFunc(1) - q);
  return r;
}

QS inverse_pochhammer_phi(const STContext& ctx, long n, int order) {
  std::vector<QuadExt> factors;
  for (long k = 0; k <= n; ++k) factors.push_back(ctx.phi_pow(n) * ctx.qhat().pow(k));
  return product_linear(factors, order).reciprocal();
}

// sum_n [n+d,d]_q q^-C(n+d,2) y^n to the given order.
RS deformed_q_gf(const RatFunc& q, long d, int order) {
  RS r(order);
  for (int n = 0; n <= order; ++n) r.set(n, q_binom(n + d, d, q) * ring_pow(q, -c2(n + d)));
  return r;
}

enum class QDeriv { paper, jackson };

RS theta_q_inverse_derivative(const RatFunc& q, long d, int order, QDeriv kind) {
  RS f = theta_partial(q.inverse(), order);
  for (long k = 0; k < d; ++k) f = kind == QDeriv::paper ? q_difference(f, q) : q_derive(f, q);
  return f;
}

RS bivariate_rhs(const Env& e, const RatFunc& second) {
  auto ctx = e.qctx();
  RatFunc q = e(Var::q), x = e(Var::x);
  return minus_binom(*ctx, -1, q, e.order, [&](long j) { return binom_poly(*ctx, x, second, j); });
}

RS squared_binomial_lhs(const RatFunc& q, int order) {
  RS r(order);
  for (int n = 1; n <= order; ++n) {
    RatFunc g = q_binom(n + 1, 2, q);
    r.set(n, g * g);
  }
  return r;
}

}  // namespace

void register_generating(std::vector<TheoremCase>& out) {
  add(out, "s7.theo_gfn", "7",
      "sum_n {n+d,d} (-t)^-C(n+d,2) (-y/t)^n = Theta_0^(d)(-y/t, -1/t) / {d}!", RingReq::ratfunc,
      {Var::s, Var::t},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc t = e(Var::t);
        Items r;
        for (long d = 0; d <= 3; ++d) {
          RS s(e.order);
          for (int n = 0; n <= e.order; ++n) {
            s.set(n, ctx->binom(n + d, d) * ring_pow(-t, -c2(n + d)) * ring_pow(-t.inverse(), n));
          }
          append(r, items(s));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc t = e(Var::t), q = -t.inverse();
        Items r;
        for (long d = 0; d <= 3; ++d) {
          RS th = theta_deriv(*ctx, d, ThetaMode::direct, q, e.order + static_cast<int>(d));
          append(r, items(ctx->fib_factorial(d).inverse() * th.scale_arg(q)));
        }
        return r;
      })
      .note = "series in y; the deformation u cancels from both sides";

  auto& cor2 = add(
      out, "s7.cor2_t_minus_one", "7", "sum_n {n+d,d}_{s,-1} x^n = 1/(phi^d x; q)_{d+1}", RingReq::quadext, {Var::s},
      [](const Env& e) {
        auto ctx = STContext::custom(e(Var::s), RatFunc(-1));
        Items r;
        for (long d = 0; d <= 3; ++d) {
          std::vector<QuadExt> v;
          for (long n = 0; n <= e.order; ++n) v.push_back(QuadExt(ctx->binom(n + d, d)));
          append(r, items(v));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = STContext::custom(e(Var::s), RatFunc(-1));
        Items r;
        for (long d = 0; d <= 3; ++d) append(r, items(inverse_pochhammer_phi(*ctx, d, e.order)));
        return r;
      });
  cor2.note = "the general generating function at t = -1";
  cor2.accept = [](const std::map<Var, BigRat>& p) {
    BigRat disc = p.at(Var::s) * p.at(Var::s) - BigRat(4), root;
    return !disc.is_zero() && !rational_sqrt(disc, root);
  };

  auto cor3_rhs = [](QDeriv kind) {
    return [kind](const Env& e) {
      RatFunc q = e(Var::q);
      Items r;
      for (long d = 0; d <= 3; ++d) {
        RS th = theta_q_inverse_derivative(q, d, e.order, kind);
        append(r, items(q_factorial(q, d).inverse() * th));
      }
      return r;
    };
  };
  auto cor3_lhs = [](const Env& e) {
    Items r;
    for (long d = 0; d <= 3; ++d) append(r, items(deformed_q_gf(e(Var::q), d, e.order - static_cast<int>(d))));
    return r;
  };
  printed_form(add(out, "s7.cor3.printed", "7",
                   "sum_n [n+d,d]_q q^-C(n+d,2) y^n = D_q^d Theta_0(y,q^-1) / [d]_q!", RingReq::ratfunc, {Var::q},
                   cor3_lhs, cor3_rhs(QDeriv::paper)),
               "with D_q f = (f(x) - f(qx))/x the factor is 1/(q;q)_d, not 1/[d]_q!");
  add(out, "s7.cor3.jackson", "7", "sum_n [n+d,d]_q q^-C(n+d,2) y^n = D_q^d Theta_0(y,q^-1) / [d]_q!, Jackson D_q",
      RingReq::ratfunc, {Var::q}, cor3_lhs, cor3_rhs(QDeriv::jackson))
      .note = "holds for the Jackson derivative x^n -> [n]_q x^(n-1)";

  add(out, "s7.theo_gfd", "7", "sum_d {n+d,d} q^C(n+d,2) x^d = Theta_0^(n)(x,q) / {n}!", RingReq::ratfunc,
      {Var::s, Var::t, Var::q},
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc q = e(Var::q);
        Items r;
        for (long n = 0; n <= 3; ++n) {
          RS s(e.order - static_cast<int>(n));
          for (int d = 0; d <= s.order(); ++d) s.set(d, ctx->binom(n + d, d) * ring_pow(q, c2(n + d)));
          append(r, items(s));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 0; n <= 3; ++n) {
          append(r, items(ctx->fib_factorial(n).inverse() *
                          theta_deriv(*ctx, n, ThetaMode::direct, e(Var::q), e.order)));
        }
        return r;
      });

  add(out, "s7.cor4", "7", "sum_d [n+d,d]_q q^-C(n+d,2) x^d = D_q^n Theta_0(x,q^-1) / (q;q)_n", RingReq::ratfunc,
      {Var::q},
      [](const Env& e) {
        Items r;
        for (long n = 0; n <= 3; ++n) append(r, items(deformed_q_gf(e(Var::q), n, e.order - static_cast<int>(n))));
        return r;
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        Items r;
        for (long n = 0; n <= 3; ++n) {
          append(r, items(q_pochhammer(q, q, n).inverse() * theta_q_inverse_derivative(q, n, e.order, QDeriv::paper)));
        }
        return r;
      });

  add(out, "s7.cor_gfd", "7", "sum_d {n+d,d} x^d = 1/(phi^n x; q)_{n+1}", RingReq::quadext, {Var::s, Var::t},
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 0; n <= 4; ++n) {
          std::vector<QuadExt> v;
          for (long d = 0; d <= e.order; ++d) v.push_back(QuadExt(ctx->binom(n + d, d)));
          append(r, items(v));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long n = 0; n <= 4; ++n) append(r, items(inverse_pochhammer_phi(*ctx, n, e.order)));
        return r;
      });

  auto bivariate_lhs = [](const Env& e) {
    RatFunc q = e(Var::q), x = e(Var::x), y = e(Var::y);
    RS r(e.order);
    for (int m = 0; m <= e.order; ++m) {
      RatFunc c;
      for (int d = 0; d <= m; ++d) c += q_binom(m, d, q) * ring_pow(x, d) * ring_pow(y, m - d);
      r.set(m, ring_pow(q, -c2(m)) * c);
    }
    return items(r);
  };
  add(out, "s7.bivariate_first", "7",
      "sum_{n,d} [n+d,d]_q q^-C(n+d,2) x^d y^n = (1 (-)_{1,1} q(x (+)_{1,1} y))_q^(-1)", RingReq::ratfunc,
      {Var::q, Var::x, Var::y}, bivariate_lhs, [](const Env& e) { return items(bivariate_rhs(e, e(Var::y))); })
      .note = "graded by total degree in (x, y)";
  printed_form(add(out, "s7.bivariate_second.printed", "7",
                   "sum_{d,n} [n+d,d]_q q^-C(n+d,2) x^n y^d = (1 (-)_{1,1} q(x (+)_{1,1} (1-q)y))_q^(-1)",
                   RingReq::ratfunc, {Var::q, Var::x, Var::y}, bivariate_lhs,
                   [](const Env& e) { return items(bivariate_rhs(e, (RatFunc(1) - e(Var::q)) * e(Var::y))); }),
               "the factor (1-q) on y does not belong; the sum is symmetric in x and y");
  add(out, "s7.bivariate_second.corrected", "7",
      "sum_{d,n} [n+d,d]_q q^-C(n+d,2) x^n y^d = (1 (-)_{1,1} q(x (+)_{1,1} y))_q^(-1)", RingReq::ratfunc,
      {Var::q, Var::x, Var::y}, bivariate_lhs, [](const Env& e) { return items(bivariate_rhs(e, e(Var::y))); });

  printed_form(
      add(out, "s7.squared_binomial_ogf.printed", "7",
          "sum_n [n+1,2]_q^2 x^n = (x + (q^2-3q^4+q^6)x^2 + (q^2-q^3+2q^4)x^3 + (q^6+q^7)x^4) / ((1-x)(1-q^2x)(qx;q)_4)",
          RingReq::ratfunc, {Var::q}, [](const Env& e) { return items(squared_binomial_lhs(e(Var::q), e.order)); },
          [](const Env& e) {
            RatFunc q = e(Var::q);
            auto p = [&](long k) { return ring_pow(q, k); };
            RS num = RS::from({0, 1, p(2) - 3 * p(4) + p(6), p(2) - p(3) + 2 * p(4), p(6) + p(7)}, e.order);
            RS den = RS::from({1, -1}, e.order) * RS::from({1, -p(2)}, e.order) *
                     q_pochhammer_poly(q, q, 4, e.order);
            return items(num * den.reciprocal());
          }),
      "already the x^2 coefficient differs; the closed form is (x + (q+2q^2+q^3)x^2 + q^4x^3)/((1-x)(qx;q)_4)");
  add(out, "s7.squared_binomial_ogf.corrected", "7",
      "sum_n [n+1,2]_q^2 x^n = (x + (q+2q^2+q^3)x^2 + q^4x^3) / ((1-x)(qx;q)_4)", RingReq::ratfunc, {Var::q},
      [](const Env& e) { return items(squared_binomial_lhs(e(Var::q), e.order)); },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        RS num = RS::from({0, 1, q + 2 * q * q + ring_pow(q, 3), ring_pow(q, 4)}, e.order);
        RS den = RS::from({1, -1}, e.order) * q_pochhammer_poly(q, q, 4, e.order);
        return items(num * den.reciprocal());
      });
  add(out, "s7.squared_binomial_ogf.proof_step", "7",
      "sum_n [n+1,2]_q^2 x^n = 1/(1-q^2x) sum_k [k]_{q^2} [k]_q^2 x^k", RingReq::ratfunc, {Var::q},
      [](const Env& e) { return items(squared_binomial_lhs(e(Var::q), e.order)); },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        RS s(e.order);
        for (int k = 1; k <= e.order; ++k) s.set(k, q_number(q * q, k) * q_number(q, k) * q_number(q, k));
        return items(RS::from({1, -(q * q)}, e.order).reciprocal() * s);
      });
}

}  // namespace stcalc::verify::cases
