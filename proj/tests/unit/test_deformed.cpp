#include <gtest/gtest.h>

#include "stcalc/deformed.hpp"
#include "stcalc/qrs.hpp"

using namespace stcalc;

namespace {

using RS = Series<RatFunc>;

RatFunc V(Var v) { return RatFunc::var(v); }
long c2(long n) { return n * (n - 1) / 2; }

}  // namespace

TEST(DeformedExp, Definition) {
  auto ctx = STContext::symbolic();
  RatFunc z = V(Var::z), u = V(Var::u);
  RS e0 = deformed_exp(*ctx, z, RatFunc(0), 5);
  EXPECT_EQ(e0, RS::from({1, z}, 5));
  RS e = deformed_exp(*ctx, z, u, 3);
  EXPECT_EQ(e[2], u * z * z / ctx->fib_factorial(2));
  EXPECT_EQ(e[3], ring_pow(u, 3) * ring_pow(z, 3) / ctx->fib_factorial(3));
  RS cls = deformed_exp(*STContext::specialized(2, -1), RatFunc(1), RatFunc(1), 3);
  EXPECT_EQ(cls, RS::from({1, 1, BigRat(1, 2), BigRat(1, 6)}, 3));
}

TEST(DeformedBinom, Examples) {
  auto ctx = STContext::symbolic();
  RatFunc x = V(Var::x), y = V(Var::y), u = V(Var::u), v = V(Var::v);
  RS b = deformed_binom(*ctx, x, y, 2, u, v, 4);
  EXPECT_EQ(b, RS::from({u * x * x, V(Var::s) * x * y, v * y * y}, 4));
  RS y0 = deformed_binom(*ctx, x, RatFunc(0), 5, u, v, 6);
  EXPECT_EQ(y0, RS::constant(ring_pow(u, 10) * ring_pow(x, 5), 6));
  EXPECT_THROW(deformed_binom(*ctx, RatFunc(0), y, -1, u, v, 4), NotAUnit);
}

TEST(DeformedBinom, ThetaAsBinomialSeries) {
  auto ctx = STContext::symbolic();
  RatFunc q = V(Var::q), t = V(Var::t);
  RS b = deformed_binom(*ctx, RatFunc(1), t, -1, RatFunc(1), -(t * q), 12);
  EXPECT_EQ(b, theta_partial(q, 12));
}

TEST(ThetaPartial, Definition) {
  RatFunc q = V(Var::q);
  EXPECT_EQ(theta_partial(q, 4), RS::from({1, 1, q, ring_pow(q, 3), ring_pow(q, 6)}, 4));
  EXPECT_EQ(theta_partial(RatFunc(1), 5), RS::geometric(5));
  EXPECT_EQ(theta_partial(RatFunc(0), 5), RS::from({1, 1}, 5));
}

TEST(ThetaDeriv, ClosedMatchesDirect) {
  auto ctx = STContext::symbolic();
  RatFunc q = V(Var::q);
  EXPECT_EQ(theta_deriv(*ctx, 0, ThetaMode::direct, q, 6), theta_partial(q, 6));
  RS d1 = theta_deriv(*ctx, 1, ThetaMode::direct, q, 6);
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(d1[m], ctx->fib(m + 1) * ring_pow(q, c2(m + 1)));
  for (long n = 0; n <= 4; ++n) {
    EXPECT_EQ(theta_deriv(*ctx, n, ThetaMode::closed, q, 8), theta_deriv(*ctx, n, ThetaMode::direct, q, 8));
  }
}

TEST(ThetaDeriv, AtQEqualOne) {
  auto ctx = STContext::specialized(1, 1);
  RS d = theta_deriv(*ctx, 2, ThetaMode::direct, RatFunc(1), 10);
  std::vector<QuadExt> factors;
  for (int k = 0; k <= 2; ++k) factors.push_back(ctx->phi_pow(2) * ctx->qhat().pow(k));
  auto rhs = QuadExt(ctx->fib_factorial(2)) * product_linear(factors, 8).reciprocal();
  for (int m = 0; m <= 8; ++m) {
    EXPECT_TRUE(rhs[m].delta_part().is_zero());
    EXPECT_EQ(QuadExt(d[m]), rhs[m]);
  }
}

TEST(Trinomial, ReducesToBinomial) {
  auto ctx = STContext::symbolic();
  RatFunc x = V(Var::x), y = V(Var::y), u = V(Var::u), v = V(Var::v), w = V(Var::w);
  for (long a : {2L, 3L, -1L, -2L}) {
    EXPECT_EQ(deformed_trinom(*ctx, x, y, RatFunc(0), {u, v, w}, a, 5), deformed_binom(*ctx, x, y, a, u, v, 5));
  }
}

TEST(Trinomial, DoubleSumOracle) {
  auto ctx = STContext::symbolic();
  RatFunc x = V(Var::x), y = V(Var::y), z = V(Var::z), u = V(Var::u), v = V(Var::v), w = V(Var::w);
  RatFunc expect;
  for (long k = 0; k <= 2; ++k) {
    for (long j = 0; j <= k; ++j) {
      expect += st_binom(*ctx, 2, k) * ring_pow(u, c2(2 - k)) * ring_pow(x, 2 - k) * st_binom(*ctx, k, j) *
                ring_pow(v, c2(k - j)) * ring_pow(w, c2(j)) * ring_pow(y, k - j) * ring_pow(z, j);
    }
  }
  RS tri = deformed_trinom(*ctx, x, y, z, {u, v, w}, 2, 4);
  RatFunc total;
  for (int i = 0; i <= 4; ++i) total += tri[i];
  EXPECT_EQ(total, expect);
  RS left = trinom_left(*ctx, x, y, z, u, v, w, 2, 4);
  EXPECT_EQ(left, tri);
}

TEST(Translation, OperatorPowers) {
  // (T_{u^-1} D)^k u^C(n,2) x^n = fib(n)!/fib(n-k)! u^C(n-k,2) x^(n-k)
  auto ctx = STContext::symbolic();
  RatFunc x = V(Var::x), u = V(Var::u);
  for (long n = 0; n <= 8; ++n) {
    RatFunc f = ring_pow(u, c2(n)) * ring_pow(x, n);
    for (long k = 0; k <= n + 1; ++k) {
      RatFunc expect = k > n ? RatFunc(0)
                             : ctx->fib_factorial(n) / ctx->fib_factorial(n - k) * ring_pow(u, c2(n - k)) *
                                   ring_pow(x, n - k);
      EXPECT_EQ(f, expect) << n << "," << k;
      f = shifted_derivative(*ctx, f, Var::x, u.inverse());
    }
  }
}

TEST(Translation, Proposition) {
  auto ctx = STContext::symbolic();
  RatFunc x = V(Var::x), y = V(Var::y), u = V(Var::u), v = V(Var::v);
  EXPECT_EQ(translation_apply(*ctx, RS::constant(x * x, 4), Var::x, RatFunc(0), u, v),
            RS::constant(x * x, 4));
  for (long a : {2L, 3L, -1L, -2L}) {
    RS target = RS::constant(ring_pow(u, c2(a)) * ring_pow(x, a), 5);
    EXPECT_EQ(translation_apply(*ctx, target, Var::x, y, u, v), deformed_binom(*ctx, x, y, a, u, v, 5)) << a;
  }
  // exp(x, u) with x graded
  const int N = 6;
  RS e = deformed_exp(*ctx, x, u, N);
  RS lhs = translation_apply(*ctx, e, Var::x, y, u, v, 0);
  RS rhs(N);
  for (int m = 0; m <= N; ++m) {
    RatFunc total;
    RS bm = deformed_binom(*ctx, x, y, m, u, v, m);
    for (int i = 0; i <= m; ++i) total += bm[i];
    rhs.set(m, total / ctx->fib_factorial(m));
  }
  EXPECT_EQ(lhs, rhs);
}
