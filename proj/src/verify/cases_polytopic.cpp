#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

const std::vector<Var> kST = {Var::s, Var::t};

QuadExt Q(const RatFunc& r) { return QuadExt(r); }

// Integer sequence a_{n+2} = s a_{n+1} + t a_n with a_0 = 0, a_1 = 1.
std::vector<BigRat> lucas_sequence(long s, long t, int count) {
  std::vector<BigRat> a = {BigRat(0), BigRat(1)};
  while (static_cast<int>(a.size()) < count) a.push_back(BigRat(s) * a[a.size() - 1] + BigRat(t) * a[a.size() - 2]);
  return a;
}

RatFunc qint(const RatFunc& q, long k) { return (RatFunc(1) - ring_pow(q, k)) / (RatFunc(1) - q); }

Items poly_values(const std::string& name, long lift, long d, long from, long to) {
  auto ctx = specialization_context(name);
  Items r;
  for (long n = from; n <= to; ++n) r.emplace_back(ctx->binom(n + lift, d).constant_value());
  return r;
}

struct Closed {
  const char* name;
  long s, t;
  BigRat scale2;  // {n+1,2} = scale2 a_n a_{n+1}
  BigRat scale3;  // {n+2,3} = scale3 a_n a_{n+1} a_{n+2}
};

const std::vector<Closed> kClosed = {
    {"fibonacci", 1, 1, BigRat(1), BigRat(1, 2)},
    {"pell", 2, 1, BigRat(1, 2), BigRat(1, 10)},
    {"jacobsthal", 1, 2, BigRat(1), BigRat(1, 3)},
    {"mersenne", 3, -2, BigRat(1, 3), BigRat(1, 21)},
};

}  // namespace

void register_polytopic(std::vector<TheoremCase>& out) {
  add(out, "s6.polytopic_recurrence_phi", "6", "{n+d,d} = phi^d {n+d-1,d} + phi'^n {n+d-1,d-1}", RingReq::quadext,
      kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long d = 1; d <= 4; ++d) {
          for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + d, d)));
        }
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long d = 1; d <= 4; ++d) {
          for (long n = 0; n <= e.order; ++n) {
            r.push_back(ctx->phi_pow(d) * Q(ctx->binom(n + d - 1, d)) +
                        ctx->phi_prime_pow(n) * Q(ctx->binom(n + d - 1, d - 1)));
          }
        }
        return items(r);
      });

  auto recurrence2_lhs = [](const Env& e) {
    auto ctx = e.st();
    std::vector<QuadExt> r;
    for (long d = 1; d <= 4; ++d) {
      for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + d, d)));
    }
    return items(r);
  };
  auto recurrence2_rhs = [](bool corrected) {
    return [corrected](const Env& e) {
      auto ctx = e.st();
      std::vector<QuadExt> r;
      for (long d = 1; d <= 4; ++d) {
        for (long n = 0; n <= e.order; ++n) {
          long upper = corrected ? n + d - 1 : n - d - 1;
          r.push_back(ctx->phi_prime_pow(d) * Q(ctx->binom(n + d - 1, d)) +
                      ctx->phi_pow(n) * Q(ctx->binom(upper, d - 1)));
        }
      }
      return items(r);
    };
  };
  printed_form(add(out, "s6.polytopic_recurrence_phiprime.printed", "6",
                   "{n+d,d} = phi'^d {n+d-1,d} + phi^n {n-d-1,d-1}", RingReq::quadext, kST, recurrence2_lhs,
                   recurrence2_rhs(false)),
               "the second coefficient must be {n+d-1,d-1}");
  add(out, "s6.polytopic_recurrence_phiprime.corrected", "6", "{n+d,d} = phi'^d {n+d-1,d} + phi^n {n+d-1,d-1}",
      RingReq::quadext, kST, recurrence2_lhs, recurrence2_rhs(true));

  for (bool use_phi : {true, false}) {
    add(out, use_phi ? "s6.reduction_phi" : "s6.reduction_phiprime", "6",
        use_phi ? "{n+d,d+1} = sum_{k=1}^n phi^{(d+1)(n-k)} phi'^(k-1) {k+d-1,d}"
                : "{n+d,d+1} = sum_{k=1}^n phi'^{(d+1)(n-k)} phi^(k-1) {k+d-1,d}",
        RingReq::quadext, kST,
        [](const Env& e) {
          auto ctx = e.st();
          std::vector<QuadExt> r;
          for (long d = 0; d <= 3; ++d) {
            for (long n = 1; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + d, d + 1)));
          }
          return items(r);
        },
        [use_phi](const Env& e) {
          auto ctx = e.st();
          std::vector<QuadExt> r;
          for (long d = 0; d <= 3; ++d) {
            for (long n = 1; n <= e.order; ++n) {
              QuadExt acc;
              for (long k = 1; k <= n; ++k) {
                QuadExt w = use_phi ? ctx->phi_pow((d + 1) * (n - k)) * ctx->phi_prime_pow(k - 1)
                                    : ctx->phi_prime_pow((d + 1) * (n - k)) * ctx->phi_pow(k - 1);
                acc += w * Q(ctx->binom(k + d - 1, d));
              }
              r.push_back(acc);
            }
          }
          return items(r);
        });
  }

  add(out, "s6.reduction_q", "6", "[n+d,d+1]_q = sum_k q^(k-1) [k+d-1,d]_q = sum_k q^{(d+1)(n-k)} [k+d-1,d]_q",
      RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (int pass = 0; pass < 2; ++pass) {
          for (long d = 0; d <= 3; ++d) {
            for (long n = 1; n <= e.order; ++n) r.push_back(q_binom(n + d, d + 1, q));
          }
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (int pass = 0; pass < 2; ++pass) {
          for (long d = 0; d <= 3; ++d) {
            for (long n = 1; n <= e.order; ++n) {
              RatFunc acc;
              for (long k = 1; k <= n; ++k) {
                acc += ring_pow(q, pass == 0 ? k - 1 : (d + 1) * (n - k)) * q_binom(k + d - 1, d, q);
              }
              r.push_back(acc);
            }
          }
        }
        return items(r);
      });

  add(out, "s6.triangular_recurrences", "6", "the four recurrences for {n+1,2} and {n+2,2}", RingReq::quadext, kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 2, 2)));
        for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 2, 2)));
        for (long n = 1; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 1, 2)));
        for (long n = 1; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 1, 2)));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(ctx->phi_pow(2) * Q(ctx->binom(n + 1, 2)) + ctx->phi_prime_pow(n) * Q(ctx->fib(n + 1)));
        }
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(ctx->phi_prime_pow(2) * Q(ctx->binom(n + 1, 2)) + ctx->phi_pow(n) * Q(ctx->fib(n + 1)));
        }
        for (bool use_phi : {true, false}) {
          for (long n = 1; n <= e.order; ++n) {
            QuadExt acc;
            for (long k = 1; k <= n; ++k) {
              QuadExt w = use_phi ? ctx->phi_pow(2 * (n - k)) * ctx->phi_prime_pow(k - 1)
                                  : ctx->phi_prime_pow(2 * (n - k)) * ctx->phi_pow(k - 1);
              acc += w * Q(ctx->fib(k));
            }
            r.push_back(acc);
          }
        }
        return items(r);
      });

  add(out, "s6.triangular_q_sums", "6",
      "[n+1,2]_q = sum_k (1-q^k)/(1-q) q^{2(n-k)} = sum_k q^(k-1) (1-q^k)/(1-q)", RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (int pass = 0; pass < 2; ++pass) {
          for (long n = 1; n <= e.order; ++n) r.push_back(q_binom(n + 1, 2, q));
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (int pass = 0; pass < 2; ++pass) {
          for (long n = 1; n <= e.order; ++n) {
            RatFunc acc;
            for (long k = 1; k <= n; ++k) acc += qint(q, k) * ring_pow(q, pass == 0 ? 2 * (n - k) : k - 1);
            r.push_back(acc);
          }
        }
        return items(r);
      });

  add(out, "s6.triangular_step", "6", "{n+2,2} = t {n+1,2} + {n+1}^2", RingReq::ratfunc, kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(ctx->binom(n + 2, 2));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(e(Var::t) * ctx->binom(n + 1, 2) + ctx->fib(n + 1) * ctx->fib(n + 1));
        }
        return items(r);
      });

  add(out, "s6.alternating_squares", "6", "{n+1,2} = sum_{k=1}^n t^(n-k) {k}^2", RingReq::ratfunc, kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 1; n <= e.order; ++n) r.push_back(ctx->binom(n + 1, 2));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 1; n <= e.order; ++n) {
          RatFunc acc;
          for (long k = 1; k <= n; ++k) acc += ring_pow(e(Var::t), n - k) * ctx->fib(k) * ctx->fib(k);
          r.push_back(acc);
        }
        return items(r);
      });

  add(out, "s6.triangular_step_q", "6", "[n+2,2]_q = -q [n+1,2]_q + ((1-q^{n+1})/(1-q))^2", RingReq::ratfunc,
      {Var::q},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(q_binom(n + 2, 2, e(Var::q)));
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(-q * q_binom(n + 1, 2, q) + qint(q, n + 1) * qint(q, n + 1));
        return items(r);
      });

  add(out, "s6.schlosser_q_squares", "6", "[n+1,2]_q = sum_{k=1}^n (-q)^(n-k) ((1-q^k)/(1-q))^2", RingReq::ratfunc,
      {Var::q},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 1; n <= 20; ++n) r.push_back(q_binom(n + 1, 2, e(Var::q)));
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 1; n <= 20; ++n) {
          RatFunc acc;
          for (long k = 1; k <= n; ++k) acc += ring_pow(-q, n - k) * qint(q, k) * qint(q, k);
          r.push_back(acc);
        }
        return items(r);
      })
      .note = "n = 1..20";

  add(out, "s6.triangular_cube_difference", "6",
      "{n+2,2}^2 - t^2 {n+1,2}^2 = (({n+2} + t{n})/s) {n+1}^3", RingReq::ratfunc, kST,
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc t = e(Var::t);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          RatFunc a = ctx->binom(n + 2, 2), b = ctx->binom(n + 1, 2);
          r.push_back(a * a - t * t * b * b);
        }
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc s = e(Var::s), t = e(Var::t);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back((ctx->fib(n + 2) + t * ctx->fib(n)) / s * ring_pow(ctx->fib(n + 1), 3));
        }
        return items(r);
      });

  add(out, "s6.triangular_cube_difference_q", "6",
      "[n+2,2]_q^2 - q^2 [n+1,2]_q^2 = (1-q^{2(n+1)})/(1-q^2) ((1-q^{n+1})/(1-q))^2", RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          RatFunc a = q_binom(n + 2, 2, q), b = q_binom(n + 1, 2, q);
          r.push_back(a * a - q * q * b * b);
        }
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(qint(q * q, n + 1) * qint(q, n + 1) * qint(q, n + 1));
        return items(r);
      });

  add(out, "s6.sum_of_cubes", "6",
      "sum_k t^{2(n-k)} (({k+1} + t{k-1})/s) {k}^3 = (sum_k phi^{2(n-k)} phi'^(k-1) {k})^2", RingReq::quadext, kST,
      [](const Env& e) {
        auto ctx = e.st();
        RatFunc s = e(Var::s), t = e(Var::t);
        std::vector<QuadExt> r;
        for (long n = 1; n <= e.order; ++n) {
          RatFunc acc;
          for (long k = 1; k <= n; ++k) {
            acc += ring_pow(t, 2 * (n - k)) * (ctx->fib(k + 1) + t * ctx->fib(k - 1)) / s * ring_pow(ctx->fib(k), 3);
          }
          r.push_back(Q(acc));
        }
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long n = 1; n <= e.order; ++n) {
          QuadExt acc;
          for (long k = 1; k <= n; ++k) {
            acc += ctx->phi_pow(2 * (n - k)) * ctx->phi_prime_pow(k - 1) * Q(ctx->fib(k));
          }
          r.push_back(acc * acc);
        }
        return items(r);
      });

  // Left sides through the library at the specialization; right sides from a
  // local integer recurrence.
  struct CubeCase {
    const char* id;
    const char* citation;
    const char* spec;
    long s, t;
    long weight;  // 4^{n-k} or 1
    long lower;   // a_{k+1} + lower * a_{k-1}
    BigRat scale;
  };
  const std::vector<CubeCase> cubes = {
      {"s6.cubes_fibonacci", "sum (F_{k+1}+F_{k-1}) F_k^3 = F_n^2 F_{n+1}^2", "fibonacci", 1, 1, 1, 1, BigRat(1)},
      {"s6.cubes_pell", "sum (P_{k+1}+P_{k-1}) P_k^3 = P_n^2 P_{n+1}^2 / 2", "pell", 2, 1, 1, 1, BigRat(1, 2)},
      {"s6.cubes_jacobsthal", "sum 4^{n-k} (J_{k+1}+2J_{k-1}) J_k^3 = J_n^2 J_{n+1}^2", "jacobsthal", 1, 2, 4, 2,
       BigRat(1)},
      {"s6.cubes_mersenne", "sum 4^{n-k} (2^k+1)(2^k-1)^3 = (2^n-1)^2 (2^{n+1}-1)^2 / 3", "mersenne", 3, -2, 4, -2,
       BigRat(1, 3)},
  };
  for (const auto& cc : cubes) {
    add(out, cc.id, "6", cc.citation, RingReq::integer, {},
        [cc](const Env&) {
          auto ctx = specialization_context(cc.spec);
          Items r;
          for (long n = 1; n <= 20; ++n) {
            BigRat acc;
            for (long k = 1; k <= n; ++k) {
              BigRat a = ctx->fib(k).constant_value();
              BigRat mid = cc.lower == -2 ? BigRat(2).pow(k) + BigRat(1)
                                          : (ctx->fib(k + 1) + RatFunc(cc.lower) * ctx->fib(k - 1)).constant_value();
              acc += BigRat(cc.weight).pow(n - k) * mid * a * a * a;
            }
            r.emplace_back(acc);
          }
          return r;
        },
        [cc](const Env&) {
          auto a = lucas_sequence(cc.s, cc.t, 23);
          Items r;
          for (long n = 1; n <= 20; ++n) r.emplace_back(cc.scale * a[n] * a[n] * a[n + 1] * a[n + 1]);
          return r;
        })
        .note = "n = 1..20";
  }

  add(out, "s6.warnaar_eq21", "6",
      "sum_k q^{2(n-k)} (1-q^{2k})/(1-q^2) ((1-q^k)/(1-q))^2 = [n+1,2]_q^2", RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 1; n <= 20; ++n) {
          RatFunc acc;
          for (long k = 1; k <= n; ++k) acc += ring_pow(q, 2 * (n - k)) * qint(q * q, k) * qint(q, k) * qint(q, k);
          r.push_back(acc);
        }
        return items(r);
      },
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 1; n <= 20; ++n) {
          RatFunc g = q_binom(n + 1, 2, e(Var::q));
          r.push_back(g * g);
        }
        return items(r);
      })
      .note = "n = 1..20";

  add(out, "s6.tetrahedral_identity", "6", "{n+3,3} = st {n+2,3} + {n+1} {n+2,2}", RingReq::ratfunc, kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(ctx->binom(n + 3, 3));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(e(Var::s) * e(Var::t) * ctx->binom(n + 2, 3) + ctx->fib(n + 1) * ctx->binom(n + 2, 2));
        }
        return items(r);
      });

  add(out, "s6.tetrahedral_identity_q", "6", "[n+3,3]_q = -(1+q) q [n+2,3]_q + (1-q^{n+1})/(1-q) [n+2,2]_q",
      RingReq::ratfunc, {Var::q},
      [](const Env& e) {
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(q_binom(n + 3, 3, e(Var::q)));
        return items(r);
      },
      [](const Env& e) {
        RatFunc q = e(Var::q);
        std::vector<RatFunc> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(-(RatFunc(1) + q) * q * q_binom(n + 2, 3, q) + qint(q, n + 1) * q_binom(n + 2, 2, q));
        }
        return items(r);
      });

  add(out, "s6.tetrahedral_recurrences", "6", "the first three recurrences for {n+3,3} and {n+2,3}",
      RingReq::quadext, kST,
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 3, 3)));
        for (long n = 0; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 3, 3)));
        for (long n = 1; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + 2, 3)));
        return items(r);
      },
      [](const Env& e) {
        auto ctx = e.st();
        std::vector<QuadExt> r;
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(ctx->phi_pow(3) * Q(ctx->binom(n + 2, 3)) + ctx->phi_prime_pow(n) * Q(ctx->binom(n + 2, 2)));
        }
        for (long n = 0; n <= e.order; ++n) {
          r.push_back(ctx->phi_prime_pow(3) * Q(ctx->binom(n + 2, 3)) + ctx->phi_pow(n) * Q(ctx->binom(n + 2, 2)));
        }
        for (long n = 1; n <= e.order; ++n) {
          QuadExt acc;
          for (long k = 1; k <= n; ++k) {
            acc += ctx->phi_pow(3 * (n - k)) * ctx->phi_prime_pow(k - 1) * Q(ctx->binom(k + 1, 2));
          }
          r.push_back(acc);
        }
        return items(r);
      });

  auto tetra_sum_rhs = [](const Env& e) {
    auto ctx = e.st();
    std::vector<QuadExt> r;
    for (long n = 1; n <= e.order; ++n) {
      QuadExt acc;
      for (long k = 1; k <= n; ++k) {
        acc += ctx->phi_prime_pow(3 * (n - k)) * ctx->phi_pow(k - 1) * Q(ctx->binom(k + 1, 2));
      }
      r.push_back(acc);
    }
    return items(r);
  };
  auto tetra_sum_lhs = [](long lift) {
    return [lift](const Env& e) {
      auto ctx = e.st();
      std::vector<QuadExt> r;
      for (long n = 1; n <= e.order; ++n) r.push_back(Q(ctx->binom(n + lift, 3)));
      return items(r);
    };
  };
  printed_form(add(out, "s6.tetrahedral_sum_phiprime.printed", "6",
                   "{n+3,3} = sum_{k=1}^n phi'^{3(n-k)} phi^(k-1) {k+1,2}", RingReq::quadext, kST, tetra_sum_lhs(3),
                   tetra_sum_rhs),
               "the left side must be {n+2,3}");
  add(out, "s6.tetrahedral_sum_phiprime.corrected", "6", "{n+2,3} = sum_{k=1}^n phi'^{3(n-k)} phi^(k-1) {k+1,2}",
      RingReq::quadext, kST, tetra_sum_lhs(2), tetra_sum_rhs);

  add(out, "s6.list_golden_rectangle", "6", "{n+1,2}_{1,1} = (0,1,2,6,15,40,104,273,...)", RingReq::integer, {},
      [](const Env&) { return poly_values("fibonacci", 1, 2, 0, 7); },
      [](const Env&) { return ints({0, 1, 2, 6, 15, 40, 104, 273}); });
  add(out, "s6.list_pell_triangles", "6", "{n+1,2}_{2,1} = (0,1,5,30,174,1015,5915,...)", RingReq::integer, {},
      [](const Env&) { return poly_values("pell", 1, 2, 0, 6); },
      [](const Env&) { return ints({0, 1, 5, 30, 174, 1015, 5915}); });
  printed_form(add(out, "s6.list_jacobsthal_oblong.printed", "6", "{n+1,2}_{1,2} = (0,1,2,6,15,55,231,903,3655,...)",
                   RingReq::integer, {}, [](const Env&) { return poly_values("jacobsthal", 1, 2, 0, 8); },
                   [](const Env&) { return ints({0, 1, 2, 6, 15, 55, 231, 903, 3655}); }),
               "J_n J_{n+1} gives 0,1,3,15,55,231,903,3655 (A084175); the printed list has two stray terms");
  add(out, "s6.list_jacobsthal_oblong.corrected", "6", "{n+1,2}_{1,2} = J_n J_{n+1}", RingReq::integer, {},
      [](const Env&) { return poly_values("jacobsthal", 1, 2, 0, 7); },
      [](const Env&) { return ints({0, 1, 3, 15, 55, 231, 903, 3655}); });
  add(out, "s6.list_mersenne_triangular", "6", "{n+1,2}_{3,-2} = (0,1,7,35,155,651,2667,10795,43435,174251,...)",
      RingReq::integer, {}, [](const Env&) { return poly_values("mersenne", 1, 2, 0, 9); },
      [](const Env&) { return ints({0, 1, 7, 35, 155, 651, 2667, 10795, 43435, 174251}); });
  add(out, "s6.list_fibonacci_tetrahedral", "6", "{n+2,3}_{1,1} = (0,1,3,15,60,260,1092,4641,19635,...)",
      RingReq::integer, {}, [](const Env&) { return poly_values("fibonacci", 2, 3, 0, 8); },
      [](const Env&) { return ints({0, 1, 3, 15, 60, 260, 1092, 4641, 19635}); });
  add(out, "s6.list_pell_tetrahedral", "6", "{n+2,3}_{2,1} = (1,12,174,2436,34307,482664,...)", RingReq::integer, {},
      [](const Env&) { return poly_values("pell", 2, 3, 1, 6); },
      [](const Env&) { return ints({1, 12, 174, 2436, 34307, 482664}); })
      .note = "the printed list starts at n = 1";
  add(out, "s6.list_jacobsthal_tetrahedral", "6", "{n+2,3}_{1,2} = (0,1,5,55,385,3311,25585,208335,...)",
      RingReq::integer, {}, [](const Env&) { return poly_values("jacobsthal", 2, 3, 0, 7); },
      [](const Env&) { return ints({0, 1, 5, 55, 385, 3311, 25585, 208335}); });
  add(out, "s6.list_mersenne_tetrahedral", "6", "{n+2,3}_{3,-2} = (0,1,15,155,1395,11811,97155,...)",
      RingReq::integer, {}, [](const Env&) { return poly_values("mersenne", 2, 3, 0, 6); },
      [](const Env&) { return ints({0, 1, 15, 155, 1395, 11811, 97155}); });

  add(out, "s6.triangular_closed_forms", "6",
      "{n+1,2} = F_nF_{n+1}, P_nP_{n+1}/2, J_nJ_{n+1}, (2^n-1)(2^{n+1}-1)/3", RingReq::integer, {},
      [](const Env&) {
        Items r;
        for (const auto& c : kClosed) append(r, poly_values(c.name, 1, 2, 0, 20));
        return r;
      },
      [](const Env&) {
        Items r;
        for (const auto& c : kClosed) {
          auto a = lucas_sequence(c.s, c.t, 23);
          for (long n = 0; n <= 20; ++n) r.emplace_back(c.scale2 * a[n] * a[n + 1]);
        }
        return r;
      })
      .note = "n = 0..20";
  add(out, "s6.tetrahedral_closed_forms", "6",
      "{n+2,3} = F_nF_{n+1}F_{n+2}/2, P_nP_{n+1}P_{n+2}/10, J_nJ_{n+1}J_{n+2}/3, M_nM_{n+1}M_{n+2}/21",
      RingReq::integer, {},
      [](const Env&) {
        Items r;
        for (const auto& c : kClosed) append(r, poly_values(c.name, 2, 3, 0, 20));
        return r;
      },
      [](const Env&) {
        Items r;
        for (const auto& c : kClosed) {
          auto a = lucas_sequence(c.s, c.t, 23);
          for (long n = 0; n <= 20; ++n) r.emplace_back(c.scale3 * a[n] * a[n + 1] * a[n + 2]);
        }
        return r;
      })
      .note = "n = 0..20";

  auto mersenne_lhs = [](const Env&) { return poly_values("mersenne", 1, 2, 0, 20); };
  auto gaussian_at_two = [](long shift) {
    return [shift](const Env&) {
      Items r;
      for (long n = 0; n <= 20; ++n) r.emplace_back(q_binom(n + shift, 2, RatFunc(2)).constant_value());
      return r;
    };
  };
  printed_form(add(out, "s6.mersenne_gaussian.printed", "6", "{n+1,2}_{3,-2} = [n,2]_q at q = 2", RingReq::integer,
                   {}, mersenne_lhs, gaussian_at_two(0)),
               "the printed list matches [n+1,2]_2; the index is off by one");
  add(out, "s6.mersenne_gaussian.corrected", "6", "{n+1,2}_{3,-2} = [n+1,2]_q at q = 2", RingReq::integer, {},
      mersenne_lhs, gaussian_at_two(1));
}

}  // namespace stcalc::verify::cases
