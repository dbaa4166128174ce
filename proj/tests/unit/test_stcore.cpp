#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "stcalc/errors.hpp"
#include "stcalc/numeric.hpp"
#include "stcalc/qrs.hpp"
#include "stcalc/stcore.hpp"

using namespace stcalc;

namespace {

RatFunc S() { return RatFunc::var(Var::s); }
RatFunc T() { return RatFunc::var(Var::t); }

std::vector<BigRat> values(const STContext& ctx, long d, int count, long start = 0) {
  std::vector<BigRat> out;
  for (long n = start; n < start + count; ++n) out.push_back(polytopic(ctx, n, d).constant_value());
  return out;
}

std::vector<BigRat> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Fib, InitialValuesAndRecurrence) {
  auto ctx = STContext::symbolic();
  EXPECT_EQ(ctx->fib(0), RatFunc(0));
  EXPECT_EQ(ctx->fib(1), RatFunc(1));
  EXPECT_EQ(ctx->fib(3), S() * S() + T());
  for (long n = -8; n <= 8; ++n) {
    EXPECT_EQ(ctx->fib(n + 2), S() * ctx->fib(n + 1) + T() * ctx->fib(n)) << n;
  }
}

TEST(Fib, NegativeIndexBothRoutes) {
  auto ctx = STContext::symbolic();
  EXPECT_EQ(ctx->fib(-3), (S() * S() + T()) / (T() * T() * T()));
  for (long n = -10; n < 0; ++n) EXPECT_EQ(ctx->fib(n), fib_backward(*ctx, n)) << n;
}

TEST(Fib, MatchesIntegerOracle) {
  struct Case {
    long s, t;
  };
  for (auto [s, t] : {Case{1, 1}, Case{2, 1}, Case{1, 2}, Case{3, -2}, Case{2, -1}, Case{5, -3}}) {
    auto ctx = STContext::specialized(s, t);
    auto ref = oracle::fib_sequence(s, t, 25);
    for (long n = 0; n < 25; ++n) EXPECT_EQ(ctx->fib(n).constant_value(), BigRat(ref[n], 1));
  }
  EXPECT_EQ(STContext::specialized(1, 2)->fib(6), RatFunc(21));
}

TEST(Fib, ConfluentLimit) {
  // s^2 + 4t = 0 at (2, -1) and (4, -4)
  for (auto [s, t] : {std::pair<long, long>{2, -1}, {4, -4}, {-6, -9}}) {
    auto ctx = STContext::specialized(s, t);
    EXPECT_TRUE(ctx->degenerate());
    EXPECT_THROW(ctx->phi(), DomainError);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(ctx->fib(n), fib_confluent(*ctx, n));
  }
  EXPECT_FALSE(STContext::symbolic()->degenerate());
}

TEST(Fib, Factorial) {
  auto ctx = STContext::symbolic();
  EXPECT_EQ(ctx->fib_factorial(0), RatFunc(1));
  EXPECT_EQ(ctx->fib_factorial(3), S() * S() * S() + S() * T());
  EXPECT_EQ(STContext::specialized(1, 1)->fib_factorial(4), RatFunc(6));
  EXPECT_THROW(ctx->fib_factorial(-1), DomainError);
}

TEST(StBinom, Examples) {
  auto ctx = STContext::symbolic();
  EXPECT_EQ(st_binom(*STContext::specialized(1, 1), 4, 2), RatFunc(6));
  EXPECT_EQ(st_binom(*ctx, 7, 0), RatFunc(1));
  EXPECT_EQ(st_binom(*ctx, -4, 0), RatFunc(1));
  EXPECT_EQ(st_binom(*ctx, 3, 5), RatFunc(0));
  for (long k = 0; k <= 6; ++k) {
    RatFunc expect = (-T()).pow(-k - k * (k - 1) / 2);
    if (k % 2) expect = -expect;
    EXPECT_EQ(st_binom(*ctx, -1, k), expect) << k;
  }
}

TEST(StBinom, IntegralityAndSymmetry) {
  auto ctx = STContext::symbolic();
  for (long n = 0; n <= 16; ++n) {
    for (long k = 0; k <= n; ++k) {
      RatFunc b = st_binom(*ctx, n, k);
      EXPECT_TRUE(b.is_polynomial()) << n << "," << k;
      EXPECT_EQ(b, st_binom(*ctx, n, n - k)) << n << "," << k;
    }
  }
}

TEST(StBinom, NegativeUpperIndexRoutesAgree) {
  auto ctx = STContext::symbolic();
  for (long a = -6; a < 0; ++a) {
    for (long k = 0; k <= 5; ++k) EXPECT_EQ(st_binom(*ctx, a, k), st_binom_product(*ctx, a, k)) << a << "," << k;
  }
  for (long a = 0; a <= 8; ++a) {
    for (long k = 0; k <= 8; ++k) EXPECT_EQ(st_binom(*ctx, a, k), st_binom_product(*ctx, a, k));
  }
}

TEST(StBinom, PascalRecurrencesInExtension) {
  auto ctx = STContext::symbolic();
  QuadExt left = pascal_left(*ctx, 3, 1);
  EXPECT_EQ(left, ctx->phi() * QuadExt(ctx->fib(3)) + ctx->phi_prime().pow(3));
  EXPECT_EQ(left, QuadExt(ctx->fib(4)));
  EXPECT_EQ(pascal_left(*ctx, 0, 1), QuadExt(1));
  for (long n = 0; n <= 12; ++n) {
    for (long k = 1; k <= n + 1; ++k) {
      QuadExt l = pascal_left(*ctx, n, k), r = pascal_right(*ctx, n, k);
      EXPECT_TRUE(l.delta_part().is_zero());
      EXPECT_EQ(l, r);
      EXPECT_EQ(l.symmetric_part(), st_binom(*ctx, n + 1, k));
    }
  }
  for (long a = -4; a < 0; ++a) {
    for (long k = 1; k <= 4; ++k) {
      EXPECT_EQ(pascal_left(*ctx, a, k), QuadExt(st_binom(*ctx, a + 1, k)));
      EXPECT_EQ(pascal_right(*ctx, a, k), QuadExt(st_binom(*ctx, a + 1, k)));
    }
  }
}

TEST(StBinom, QSpecializationMatchesSubsetOracle) {
  auto ctx = STContext::qnumber(RatFunc::var(Var::q));
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(st_binom(*ctx, n, k), oracle::poly_in_q(oracle::gaussian_by_subsets(n, k)));
    }
  }
}

TEST(Polytopic, PrintedLists) {
  EXPECT_EQ(values(*STContext::specialized(2, 1), 2, 7), ints({0, 1, 5, 30, 174, 1015, 5915}));
  EXPECT_EQ(values(*STContext::specialized(3, -2), 3, 6), ints({0, 1, 15, 155, 1395, 11811}));
  EXPECT_EQ(values(*STContext::specialized(1, 1), 2, 8), ints({0, 1, 2, 6, 15, 40, 104, 273}));
  EXPECT_EQ(values(*STContext::specialized(2, 1), 3, 4, 1), ints({1, 12, 174, 2436}));
  auto ctx = STContext::symbolic();
  EXPECT_EQ(polytopic(*ctx, 5, 0), RatFunc(1));
  EXPECT_EQ(values(*STContext::specialized(2, -1), 4, 6), ints({0, 1, 5, 15, 35, 70}));
}

TEST(Specialization, NamedContexts) {
  auto ints_ctx = specialization_context("integers");
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(ints_ctx->fib(n), RatFunc(n));
  auto sp = specialization("chebyshev", {BigRat(3, 2)});
  EXPECT_EQ(sp.s0, BigRat(3));
  EXPECT_EQ(sp.t0, BigRat(-1));
  // U_{n-1}(x) with U_0 = 1, U_1 = 2x
  auto cheb = STContext::custom(RatFunc(2) * RatFunc::var(Var::x), RatFunc(-1));
  RatFunc x = RatFunc::var(Var::x);
  EXPECT_EQ(cheb->fib(3), RatFunc(4) * x * x - RatFunc(1));
  auto qn = specialization_context("qnum");
  RatFunc q = RatFunc::var(Var::q);
  for (long n = 0; n <= 8; ++n) {
    EXPECT_EQ(qn->fib(n), (RatFunc(1) - ring_pow(q, n)) / (RatFunc(1) - q));
  }
  EXPECT_EQ(specialization("pq", {2, 3}).t0, BigRat(-6));
  EXPECT_THROW(specialization("lucky"), DomainError);
  EXPECT_THROW(specialization("pq", {1}), DomainError);
}
