#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

RatFunc r_poly(long n, const RatFunc& x, const RatFunc& b, const RatFunc& q) {
  return rogers_szego_r(n, q).evaluate(x, b);
}

// (1 (-)_{1,1} c y (b (+)_{1,1} x))_q^(alpha), graded by y.
RS rs_minus(const Env& e, long alpha, const RatFunc& c, const RatFunc& x, const RatFunc& b, int order) {
  auto ctx = e.qctx();
  RatFunc q = e(Var::q);
  return minus_binom(*ctx, alpha, c, order, [&](long j) { return r_poly(j, x, b, q); });
}

}  // namespace

void register_products(std::vector<TheoremCase>& out) {
  auto bridging_lhs = [](bool printed) {
    return [printed](const Env& e) {
      RatFunc q = e(Var::q);
      Items r;
      for (long d = 0; d <= 3; ++d) {
        // coefficient of x^d y^{n+d} in sum_m q^-C(m,2) h_m(x;q) y^m
        RS s(e.order);
        for (int n = 0; n <= e.order; ++n) {
          RatFunc c = rogers_szego_r(n + d, q).coeffs[static_cast<std::size_t>(d)] * ring_pow(q, -c2(n + d));
          s.set(n, printed ? ring_pow(q, -d) * c : c);
        }
        append(r, items(s));
      }
      return r;
    };
  };
  auto bridging_rhs = [](const Env& e) {
    RatFunc q = e(Var::q);
    Items r;
    for (long d = 0; d <= 3; ++d) {
      RS s(e.order);
      for (int n = 0; n <= e.order; ++n) s.set(n, q_binom(n + d, d, q) * ring_pow(q, -c2(n + d)));
      append(r, items(s));
    }
    return r;
  };
  printed_form(add(out, "s8.bridging.printed", "8",
                   "[(qyx)^d] sum_n q^-C(n,2) h_n(x,q) y^n = sum_n [n+d,d]_q q^-C(n+d,2) y^n", RingReq::ratfunc,
                   {Var::q}, bridging_lhs(true), bridging_rhs),
               "extracting (qyx)^d leaves a spurious q^-d; the coefficient of x^d y^d is the right one");
  add(out, "s8.bridging.corrected", "8", "[x^d y^d] sum_n q^-C(n,2) h_n(x,q) y^n = sum_n [n+d,d]_q q^-C(n+d,2) y^n",
      RingReq::ratfunc, {Var::q}, bridging_lhs(false), bridging_rhs);

  auto first_lhs = [](const Env& e) {
    RatFunc q = e(Var::q);
    Items r;
    for (long d = 0; d <= 2; ++d) {
      RS s(e.order);
      for (int n = 0; n <= e.order; ++n) {
        s.set(n, q_binom(n + d, d, q) * ring_pow(q, -c2(n + d)) * r_poly(n, e(Var::x), e(Var::b), q));
      }
      append(r, items(s));
    }
    return r;
  };
  auto first_rhs = [](bool printed) {
    return [printed](const Env& e) {
      RatFunc q = e(Var::q);
      Items r;
      for (long d = 0; d <= 2; ++d) {
        RatFunc c = ring_pow(q, -c2(d));
        if (printed) c *= ring_pow(RatFunc(1) - q, d);
        append(r, items(c * rs_minus(e, -d - 1, q, e(Var::x), e(Var::b), e.order)));
      }
      return r;
    };
  };
  printed_form(add(out, "s8.first_statement1.printed", "8",
                   "sum_n [n+d,d]_q q^-C(n+d,2) r_n(x,b;q) y^n = q^-C(d,2) (1-q)^d (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1)",
                   RingReq::ratfunc, {Var::q, Var::x, Var::b}, first_lhs, first_rhs(true)),
               "the factor (1-q)^d comes from mixing 1/[d]_q! with (q;q)_d and must be dropped");
  add(out, "s8.first_statement1.corrected", "8",
      "sum_n [n+d,d]_q q^-C(n+d,2) r_n(x,b;q) y^n = q^-C(d,2) (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1)",
      RingReq::ratfunc, {Var::q, Var::x, Var::b}, first_lhs, first_rhs(false));

  add(out, "s8.first_statement2", "8",
      "sum_d [n+d,d]_q q^-C(n+d,2) r_d(x,b;q) y^d = q^-C(n,2) (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-n-1)",
      RingReq::ratfunc, {Var::q, Var::x, Var::b},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        Items r;
        for (long n = 0; n <= 2; ++n) {
          RS s(e.order);
          for (int d = 0; d <= e.order; ++d) {
            s.set(d, q_binom(n + d, d, q) * ring_pow(q, -c2(n + d)) * r_poly(d, e(Var::x), e(Var::b), q));
          }
          append(r, items(s));
        }
        return r;
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        Items r;
        for (long n = 0; n <= 2; ++n) {
          append(r, items(ring_pow(q, -c2(n)) * rs_minus(e, -n - 1, q, e(Var::x), e(Var::b), e.order)));
        }
        return r;
      });

  auto shifted_lhs = [](const Env& e) {
    RatFunc q = e(Var::q);
    Items r;
    for (long d = 1; d <= 3; ++d) {
      RS s(e.order);
      for (int n = 1; n <= e.order; ++n) {
        s.set(n, q_binom(n + d - 1, d, q) * ring_pow(q, -c2(n + d - 1)) * r_poly(n, e(Var::x), e(Var::b), q));
      }
      append(r, items(s));
    }
    return r;
  };
  auto shifted_rhs = [](bool printed) {
    return [printed](const Env& e) {
      RatFunc q = e(Var::q), x = e(Var::x), b = e(Var::b);
      const int N = e.order;
      Items r;
      for (long d = 1; d <= 3; ++d) {
        RatFunc c = ring_pow(q, -c2(d));
        RS second = rs_minus(e, -d - 1, q, x, b, N);
        RS first = printed ? rs_minus(e, -d - 1, q * q, x, b * q, N) : rs_minus(e, -d - 1, q, q * x, b, N);
        RatFunc w1 = printed ? c * ring_pow(RatFunc(1) - q, d - 1) : c;
        RatFunc w2 = printed ? c * ring_pow(RatFunc(1) - q, d) : c;
        append(r, items((w1 * b) * first.shifted(1) + (w2 * x) * second.shifted(1)));
      }
      return r;
    };
  };
  printed_form(add(out, "s8.shifted_index.printed", "8",
                   "sum_{n>=1} [n+d-1,d]_q q^-C(n+d-1,2) r_n y^n = q^-C(d,2) (1-q)^(d-1) by (1 (-)_{1,1} q^2y(bq (+)_{1,1} x))_q^(-d-1) + q^-C(d,2) (1-q)^d xy (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1)",
                   RingReq::ratfunc, {Var::q, Var::x, Var::b}, shifted_lhs, shifted_rhs(true)),
               "both (1-q) powers must go, and the first series needs qy(b (+) qx) in place of q^2y(bq (+) x)");
  add(out, "s8.shifted_index.corrected", "8",
      "sum_{n>=1} [n+d-1,d]_q q^-C(n+d-1,2) r_n y^n = q^-C(d,2) [by (1 (-)_{1,1} qy(b (+)_{1,1} qx))_q^(-d-1) + xy (1 (-)_{1,1} qy(b (+)_{1,1} x))_q^(-d-1)]",
      RingReq::ratfunc, {Var::q, Var::x, Var::b}, shifted_lhs, shifted_rhs(false));

  printed_form(
      add(out, "s8.final_phi21.printed", "8",
          "sum_d [n+d,d]_q r_n(x,b;q) y^d = 1/((1-x)(qx;q)_n) 2phi1(q^{n+1},0; q^{n+1}x; q, b)", RingReq::ratfunc,
          {Var::q, Var::x, Var::b, Var::y},
          [](const Env& e) {
            RatFunc q = e(Var::q);
            Items r;
            for (long n = 0; n <= 2; ++n) {
              RS s(e.order);
              RatFunc rn = r_poly(n, e(Var::x), e(Var::b), q);
              for (int m = static_cast<int>(n); m <= e.order; ++m) {
                s.set(m, q_binom(m, m - n, q) * ring_pow(e(Var::y), m - n) * rn);
              }
              append(r, items(s));
            }
            return r;
          },
          [](const Env& e) {
            RatFunc q = e(Var::q), x = e(Var::x), b = e(Var::b);
            const int N = e.order;
            Items r;
            for (long n = 0; n <= 2; ++n) {
              RatFunc qn1 = ring_pow(q, n + 1);
              RS phi = phi21_truncated(RS::constant(qn1, N), RS(N), RS::monomial(qn1 * x, 1, N),
                                       RS::monomial(b, 1, N), q);
              RS den = RS::from({1, -x}, N) * q_pochhammer_poly(q * x, q, n, N);
              append(r, items(den.reciprocal() * phi));
            }
            return r;
          }),
      "graded by total degree in (x, b, y); the sum must run over r_d, with xy and by in the 2phi1");
  add(out, "s8.final_phi21.corrected", "8",
      "sum_d [n+d,d]_q r_d(x,b;q) y^d = 1/((1-xy)(qxy;q)_n) 2phi1(q^{n+1},0; q^{n+1}xy; q, by)", RingReq::ratfunc,
      {Var::q, Var::x, Var::b},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        Items r;
        for (long n = 0; n <= 2; ++n) {
          RS s(e.order);
          for (int d = 0; d <= e.order; ++d) s.set(d, q_binom(n + d, d, q) * r_poly(d, e(Var::x), e(Var::b), q));
          append(r, items(s));
        }
        return r;
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), x = e(Var::x), b = e(Var::b);
        const int N = e.order;
        Items r;
        for (long n = 0; n <= 2; ++n) {
          RatFunc qn1 = ring_pow(q, n + 1);
          RS phi = phi21_truncated(RS::constant(qn1, N), RS(N), RS::monomial(qn1 * x, 1, N),
                                   RS::monomial(b, 1, N), q);
          RS den = RS::from({1, -x}, N) * q_pochhammer_poly(q * x, q, n, N);
          append(r, items(den.reciprocal() * phi));
        }
        return r;
      })
      .note = "graded by y; the printed y^n prefactor from the proof is absent";
}

}  // namespace stcalc::verify::cases
