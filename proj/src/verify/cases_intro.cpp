#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

BigRat choose(long n, long k) {
  if (k < 0 || n < k) return BigRat(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRat(r, 1);
}

// sum_k C(n-1-k, k) P^(n-1-2k) T^k, the Lucas U sequence of x^2 - P x - T.
BigRat lucas_u(long n, const BigRat& P, const BigRat& T) {
  BigRat r;
  for (long k = 0; 2 * k <= n - 1; ++k) r += choose(n - 1 - k, k) * P.pow(n - 1 - 2 * k) * T.pow(k);
  return r;
}

Items fib_values(const std::string& name, const std::vector<BigRat>& params, int count) {
  auto ctx = specialization_context(name, params);
  Items r;
  for (long n = 0; n < count; ++n) r.emplace_back(ctx->fib(n).constant_value());
  return r;
}

RS leibniz_f(int order) {
  RS f(order);
  for (int k = 0; k <= order; ++k) f.set(k, RatFunc(k * k + 1));
  return f;
}

RS leibniz_g(int order) {
  RS g(order);
  for (int k = 0; k <= order; ++k) g.set(k, RatFunc(BigRat(BigInt(k % 2 ? -(1L << k) : (1L << k)), k + 1)));
  return g;
}

RS dq_pow(RS f, const RatFunc& q, int n) {
  for (int i = 0; i < n; ++i) f = q_difference(f, q);
  return f;
}

enum class LeibnizForm { printed, chen_liu, standard };

Items leibniz_rhs(const Env& e, LeibnizForm form) {
  RatFunc q = e(Var::q);
  const int N = e.order;
  RS f = leibniz_f(N), g = leibniz_g(N);
  Items out;
  for (int n = 1; n <= std::min(4, N - 1); ++n) {
    RS acc(N - n);
    for (int k = 0; k <= n; ++k) {
      RatFunc qk = ring_pow(q, k);
      RS dkf = dq_pow(f, q, k).truncated(N - n);
      RS other = form == LeibnizForm::standard ? dq_pow(g, q, n - k).scale_arg(qk)
                                               : dq_pow(g.scale_arg(qk), q, n - k);
      long e2 = form == LeibnizForm::printed ? k * (n - k) : form == LeibnizForm::chen_liu ? k * (k - n) : 0;
      acc += (ring_pow(q, e2) * q_binom(n, k, q)) * (dkf * other.truncated(N - n));
    }
    append(out, items(acc));
  }
  return out;
}

Items leibniz_lhs(const Env& e) {
  RatFunc q = e(Var::q);
  const int N = e.order;
  RS fg = leibniz_f(N) * leibniz_g(N);
  Items out;
  for (int n = 1; n <= std::min(4, N - 1); ++n) append(out, items(dq_pow(fg, q, n)));
  return out;
}

}  // namespace

void register_intro(std::vector<TheoremCase>& out) {
  add(out, "s1.pochhammer_inversion", "1", "For |q|>1, (x;q^{-1})_n = q^{-C(n,2)} (-x)^n (x^{-1};q)_n",
      RingReq::ratfunc, {Var::q, Var::x},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(q_pochhammer(e(Var::x), e(Var::q).inverse(), n));
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), x = e(Var::x);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(ring_pow(q, -c2(n)) * ring_pow(-x, n) * q_pochhammer(x.inverse(), q, n));
        }
        return items(r);
      });

  printed_form(add(out, "s1.q_leibniz.printed", "1",
                   "Leibniz rule for D_q with weight q^{k(n-k)} and D_q^{n-k}{g(q^k x)}", RingReq::ratfunc,
                   {Var::q}, leibniz_lhs, [](const Env& e) { return leibniz_rhs(e, LeibnizForm::printed); }),
               "printed weight q^{k(n-k)} fails from n = 2; the sign of the exponent is flipped");
  add(out, "s1.q_leibniz.chen_liu", "1", "Leibniz rule for D_q, weight q^{k(k-n)} on D_q^{n-k}{g(q^k x)}",
      RingReq::ratfunc, {Var::q}, leibniz_lhs,
      [](const Env& e) { return leibniz_rhs(e, LeibnizForm::chen_liu); })
      .note = "corrected weight; D_q^{n-k} acts on the composite x -> g(q^k x)";
  add(out, "s1.q_leibniz.standard", "1", "Leibniz rule for D_q, (D_q^{n-k} g)(q^k x) with no weight",
      RingReq::ratfunc, {Var::q}, leibniz_lhs,
      [](const Env& e) { return leibniz_rhs(e, LeibnizForm::standard); })
      .note = "equivalent standard form of the rule";

  add(out, "s1.hn_generating_function", "1", "h_n(x;q) has the following generating function 1/(t,xt;q)_inf",
      RingReq::ratfunc, {Var::q, Var::x},
      [](const Env& e) {
        RS r(e.order);
        for (int n = 0; n <= e.order; ++n) {
          r.set(n, rogers_szego_h(n, e(Var::x), e(Var::q)) / q_pochhammer(e(Var::q), e(Var::q), n));
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        return items(q_pochhammer_inf_inverse(RatFunc(1), q, e.order) *
                     q_pochhammer_inf_inverse(e(Var::x), q, e.order));
      });

  add(out, "s1.mehler", "1", "The Mehler's formula for h_n(x;q)", RingReq::ratfunc, {Var::q, Var::x, Var::y},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        RS r(e.order);
        for (int n = 0; n <= e.order; ++n) {
          r.set(n, rogers_szego_h(n, e(Var::x), q) * rogers_szego_h(n, e(Var::y), q) / q_pochhammer(q, q, n));
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), x = e(Var::x), y = e(Var::y);
        const int N = e.order;
        RS num = q_pochhammer_inf(x * y, q, N).power_arg(2);
        return items(num * q_pochhammer_inf_inverse(RatFunc(1), q, N) * q_pochhammer_inf_inverse(x, q, N) *
                     q_pochhammer_inf_inverse(y, q, N) * q_pochhammer_inf_inverse(x * y, q, N));
      })
      .note = "series in t";

  add(out, "s1.rogers", "1", "The Rogers formula for h_n(x;q)", RingReq::ratfunc, {Var::q, Var::x, Var::y},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        RS r(e.order);
        for (int m = 0; m <= e.order; ++m) {
          RatFunc c;
          for (int n = 0; n <= m; ++n) {
            c += ring_pow(e(Var::y), m - n) / (q_pochhammer(q, q, n) * q_pochhammer(q, q, m - n));
          }
          r.set(m, rogers_szego_h(m, e(Var::x), q) * c);
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q), x = e(Var::x), y = e(Var::y);
        const int N = e.order;
        RS num = q_pochhammer_inf(x * y, q, N).power_arg(2);
        return items(num * q_pochhammer_inf_inverse(RatFunc(1), q, N) * q_pochhammer_inf_inverse(x, q, N) *
                     q_pochhammer_inf_inverse(y, q, N) * q_pochhammer_inf_inverse(x * y, q, N));
      })
      .note = "graded by total degree in (t, s) with s = y t";

  add(out, "s1.simplicial_gf", "1", "sum_{n>=1} C(n+d-1,d) x^n = x/(1-x)^{d+1}", RingReq::ratfunc, {},
      [](const Env& e) {
        auto ctx = specialization_context("integers");
        Items r;
        for (long d = 1; d <= 5; ++d) {
          std::vector<RatFunc> v;
          for (long n = 0; n <= e.order; ++n) v.push_back(polytopic(*ctx, n, d));
          append(r, items(v));
        }
        return r;
      },
      [](const Env& e) {
        Items r;
        for (int d = 1; d <= 5; ++d) {
          RS den = RS::constant(1, e.order);
          for (int k = 0; k <= d; ++k) den *= RS::from({1, -1}, e.order);
          append(r, items(RS::monomial(1, 1, e.order) * den.reciprocal()));
        }
        return r;
      });

  add(out, "s1.list_simplicial", "1", "lists of N, T, Te, P and H", RingReq::integer, {},
      [](const Env&) {
        auto ctx = specialization_context("integers");
        Items r;
        const int counts[] = {10, 12, 10, 11, 10};
        for (long d = 1; d <= 5; ++d) {
          for (long n = 0; n < counts[d - 1]; ++n) r.emplace_back(polytopic(*ctx, n, d).constant_value());
        }
        return r;
      },
      [](const Env&) {
        Items r;
        for (const auto& list : std::vector<std::vector<long>>{
                 {0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
                 {0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66},
                 {0, 1, 4, 10, 20, 35, 56, 84, 120, 165},
                 {0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715},
                 {0, 1, 6, 21, 56, 126, 252, 462, 792, 1287}}) {
          append(r, ints(list));
        }
        return r;
      });

  printed_form(add(out, "s1.list_jacobsthal.printed", "1", "J_n = (0,1,1,2,3,5,11,21,43,85,...)",
                   RingReq::integer, {}, [](const Env&) { return fib_values("jacobsthal", {}, 10); },
                   [](const Env&) { return ints({0, 1, 1, 2, 3, 5, 11, 21, 43, 85}); }),
               "printed list has 2, 3 where J_3 = 3 and J_4 = 5 (A001045)");
  add(out, "s1.list_jacobsthal.corrected", "1", "J_n at (s,t) = (1,2)", RingReq::integer, {},
      [](const Env&) { return fib_values("jacobsthal", {}, 10); },
      [](const Env&) { return ints({0, 1, 1, 3, 5, 11, 21, 43, 85, 171}); });

  add(out, "s1.specializations", "1", "Below are some important specializations", RingReq::integer, {},
      [](const Env&) {
        Items r;
        append(r, fib_values("integers", {}, 21));
        append(r, fib_values("fibonacci", {}, 21));
        append(r, fib_values("jacobsthal", {}, 21));
        append(r, fib_values("pq", {BigRat(1, 2), BigRat(-3)}, 21));
        append(r, fib_values("chebyshev", {BigRat(3, 2)}, 21));
        append(r, fib_values("mersenne", {}, 21));
        append(r, fib_values("lucas", {BigRat(4), BigRat(-3)}, 21));
        return r;
      },
      [](const Env&) {
        Items r;
        BigRat p(BigInt(1), BigInt(2)), q(-3);
        for (long n = 0; n <= 20; ++n) r.emplace_back(BigRat(n));
        for (long n = 0; n <= 20; ++n) r.emplace_back(n == 0 ? BigRat(0) : lucas_u(n, 1, 1));
        for (long n = 0; n <= 20; ++n) r.emplace_back((BigRat(2).pow(n) - BigRat(n % 2 ? -1 : 1)) / BigRat(3));
        for (long n = 0; n <= 20; ++n) r.emplace_back((p.pow(n) - q.pow(n)) / (p - q));
        for (long n = 0; n <= 20; ++n) {
          BigRat u;
          for (long k = 0; 2 * k <= n - 1; ++k) {
            u += choose(n - 1 - k, k) * BigRat(k % 2 ? -1 : 1) * BigRat(3).pow(n - 1 - 2 * k);
          }
          r.emplace_back(u);
        }
        for (long n = 0; n <= 20; ++n) r.emplace_back(BigRat(2).pow(n) - BigRat(1));
        for (long n = 0; n <= 20; ++n) r.emplace_back(n == 0 ? BigRat(0) : lucas_u(n, 4, 3));
        return r;
      })
      .note = "n, F_n, J_n, (p^n-q^n)/(p-q) at (1/2,-3), U_{n-1}(3/2), 2^n-1, U_n(4,-3) by closed sums";
}

}  // namespace stcalc::verify::cases
