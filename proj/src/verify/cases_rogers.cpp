#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

RatFunc r_poly(long n, const RatFunc& x, const RatFunc& b, const RatFunc& q) {
  return rogers_szego_r(n, q).evaluate(x, b);
}

// (1 (-)_{1,1} c y (b (+)_{1,1} x))_q^(alpha), graded by y.
RS rs_minus(const Env& e, long alpha, const RatFunc& c, const RatFunc& x, const RatFunc& b, int order) {
  RatFunc q = e(Var::q);
  auto ctx = e.qctx();
  return minus_binom(*ctx, alpha, c, order, [&](long j) { return r_poly(j, x, b, q); });
}

}  // namespace

void register_rogers(std::vector<TheoremCase>& out) {
  add(out, "s5.exp_operator_rs", "5", "T(bD_q){x^n} = r_n(x,b;q)", RingReq::ratfunc, {Var::q, Var::b},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(q_exp_operator(e(Var::b), ring_pow(V(Var::x), n), Var::x, e(Var::q)));
        }
        return items(r);
      },
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(r_poly(n, V(Var::x), e(Var::b), e(Var::q)));
        return items(r);
      })
      .note = "x stays symbolic since D_q acts on it";

  add(out, "s5.rs_as_binomial", "5", "r_n(x,b;q) = (x (+)_{1,1} b)_q^(n)", RingReq::ratfunc,
      {Var::q, Var::x, Var::b},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(r_poly(n, e(Var::x), e(Var::b), e(Var::q)));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.qctx();
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(binom_poly(*ctx, e(Var::x), e(Var::b), n));
        return items(r);
      });

  add(out, "s5.theo_trsp", "5", "sum_n q^-C(n,2) r_n(x,b;q) y^n = (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-1)",
      RingReq::ratfunc, {Var::q, Var::x, Var::b},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        RS r(e.order);
        for (int n = 0; n <= e.order; ++n) r.set(n, ring_pow(q, -c2(n)) * r_poly(n, e(Var::x), e(Var::b), q));
        return items(r);
      },
      [](const Env& e) { return items(rs_minus(e, -1, e(Var::q), e(Var::x), e(Var::b), e.order)); });

  add(out, "s5.exp_operator_phi21", "5",
      "T(D_q){(q;q)_n/(x;q)_{n+1}} = 1/(1-x) (q;q)_n/(qx;q)_n 2phi1(q^{n+1},0; q^{n+1}x; q, b)",
      RingReq::ratfunc, {Var::q, Var::b},
      [](const Env& e) {
        RatFunc q = e(Var::q), b = e(Var::b), x = V(Var::x);
        const int N = e.order;
        Items r;
        for (long n = 0; n <= 2; ++n) {
          // (q;q)_n / (x;q)_{n+1} as a series in x
          RS f = q_pochhammer(q, q, n) * q_pochhammer_poly(RatFunc(1), q, n + 1, N).reciprocal();
          std::vector<RS> dk = {f};
          for (int k = 1; k <= N; ++k) dk.push_back(q_difference(dk.back(), q));
          RS lhs(N);
          for (int d = 0; d <= N; ++d) {
            RatFunc c;
            for (int k = 0; k <= d; ++k) {
              c += ring_pow(b, k) / q_pochhammer(q, q, k) * dk[k][d - k] * ring_pow(x, d - k);
            }
            lhs.set(d, c);
          }
          append(r, items(lhs));
        }
        return r;
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), b = e(Var::b), x = V(Var::x);
        const int N = e.order;
        Items r;
        for (long n = 0; n <= 2; ++n) {
          RatFunc qn1 = ring_pow(q, n + 1);
          RS phi = phi21_truncated(RS::constant(qn1, N), RS(N), RS::monomial(qn1 * x, 1, N),
                                   RS::monomial(b, 1, N), q);
          RS pre = RS::from({1, -x}, N) * q_pochhammer_poly(q * x, q, n, N);
          append(r, items(q_pochhammer(q, q, n) * (pre.reciprocal() * phi)));
        }
        return r;
      })
      .note = "the operator is read as T(bD_q); graded by total degree in (x, b)";

  add(out, "s5.ogf_rs", "5", "sum_n r_n(x,b;q) y^n = 1/(1-xy) 2phi1(q,0; qyx; q, by)", RingReq::ratfunc,
      {Var::q, Var::x, Var::b},
      [](const Env& e) {
        RS r(e.order);
        for (int n = 0; n <= e.order; ++n) r.set(n, r_poly(n, e(Var::x), e(Var::b), e(Var::q)));
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), x = e(Var::x), b = e(Var::b);
        const int N = e.order;
        RS phi = phi21_truncated(RS::constant(q, N), RS(N), RS::monomial(q * x, 1, N), RS::monomial(b, 1, N), q);
        return items(RS::from({1, -x}, N).reciprocal() * phi);
      })
      .note = "graded by y";

  add(out, "s5.theta_q_difference", "5", "D_q^n Theta_0(x,q^-1) = (q;q)_n q^-C(n,2) (1 (-)_{1,1} qx)_q^(-n-1)",
      RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        Items r;
        RS f = theta_partial(q.inverse(), e.order);
        for (long n = 0; n <= 4; ++n) {
          append(r, items(f));
          f = q_difference(f, q);
        }
        return r;
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        auto ctx = e.qctx();
        Items r;
        for (long n = 0; n <= 4; ++n) {
          RS b = minus_binom(*ctx, -n - 1, q, e.order - static_cast<int>(n), [](long) { return RatFunc(1); });
          append(r, items((q_pochhammer(q, q, n) * ring_pow(q, -c2(n))) * b));
        }
        return r;
      });

  auto dtrsp_lhs = [](bool u_is_q) {
    return [u_is_q](const Env& e) {
      RatFunc q = e(Var::q), b = e(Var::b), u = u_is_q ? q : e(Var::u), x = V(Var::x);
      Items r;
      for (long k = 0; k <= 2; ++k) {
        RS s(e.order);
        for (int m = 0; m <= e.order; ++m) {
          RatFunc p = q_difference_pow(ring_pow(u, -c2(m)) * ring_pow(x, m), Var::x, u, k);
          s.set(m, q_exp_operator(b, p, Var::x, q));
        }
        append(r, items(s));
      }
      return r;
    };
  };
  auto dtrsp_rhs = [](bool u_is_q) {
    return [u_is_q](const Env& e) {
      RatFunc q = e(Var::q), b = e(Var::b), u = u_is_q ? q : e(Var::u), x = V(Var::x);
      Items r;
      for (long k = 0; k <= 2; ++k) {
        RatFunc c = ring_pow(u, -c2(k + 1)) * q_pochhammer(u, u, k) * ring_pow(q, k);
        RS tail = rs_minus(e, -k - 1, q, x, b, e.order);
        append(r, items(c * tail.shifted(static_cast<int>(k))));
      }
      return r;
    };
  };
  printed_form(add(out, "s5.theo_dtrsp.printed", "5",
                   "T(bD_q){D_u^k Theta_0(xy,u^-1)} = u^-C(k+1,2) (u;u)_k q^k y^k (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-k-1)",
                   RingReq::ratfunc, {Var::q, Var::u, Var::b}, dtrsp_lhs(false), dtrsp_rhs(false)),
               "fails for u != q; the proof silently identifies the two bases");
  add(out, "s5.theo_dtrsp.u_equals_q", "5",
      "T(bD_q){D_q^k Theta_0(xy,q^-1)} = q^-C(k+1,2) (q;q)_k q^k y^k (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-k-1)",
      RingReq::ratfunc, {Var::q, Var::b}, dtrsp_lhs(true), dtrsp_rhs(true))
      .note = "graded by y; D_q acts on x";
}

}  // namespace stcalc::verify::cases
