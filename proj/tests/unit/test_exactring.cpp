#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "stcalc/errors.hpp"
#include "stcalc/numeric.hpp"
#include "stcalc/stcore.hpp"

using namespace stcalc;

namespace {

RatFunc S() { return RatFunc::var(Var::s); }
RatFunc T() { return RatFunc::var(Var::t); }

}  // namespace

TEST(BigRat, Canonical) {
  EXPECT_EQ(BigRat(1, 2) + BigRat(1, 3), BigRat(5, 6));
  EXPECT_EQ(BigRat(mpz_class(4), mpz_class(-6)).to_string(), "-2/3");
  EXPECT_EQ(BigRat::parse("-10/4"), BigRat(-5, 2));
  EXPECT_EQ(BigRat::parse("7"), BigRat(7));
  EXPECT_THROW(BigRat::parse("1/0"), DivisionByZero);
  EXPECT_THROW(BigRat::parse("x"), DomainError);
  EXPECT_THROW(BigRat(0).inverse(), DivisionByZero);
  EXPECT_EQ(BigRat(2, 3).pow(-2), BigRat(9, 4));
}

TEST(MPoly, ArithmeticAndOrder) {
  MPoly s = MPoly::var(Var::s), t = MPoly::var(Var::t);
  MPoly p = (s + t) * (s - t);
  EXPECT_EQ(p, s * s - t * t);
  EXPECT_EQ(p.to_string(), "s^2 - t^2");
  EXPECT_EQ((s * s + MPoly(4) * t).to_string(), "s^2 + 4*t");
  EXPECT_EQ(p.leading().first, Monomial::of(Var::s, 2));
}

TEST(MPoly, ExactDivision) {
  MPoly s = MPoly::var(Var::s), t = MPoly::var(Var::t);
  MPoly a = (s * s + t) * (s - MPoly(3) * t * t);
  auto q = a.divide_exact(s * s + t);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, s - MPoly(3) * t * t);
  EXPECT_FALSE((a + MPoly(1)).divide_exact(s * s + t).has_value());
}

TEST(MPoly, GcdRecoversCommonFactor) {
  std::mt19937_64 rng(7);
  std::vector<Var> vars = {Var::s, Var::t, Var::q};
  for (int trial = 0; trial < 40; ++trial) {
    MPoly g = oracle::random_poly(rng, vars, 3, 2);
    MPoly a = oracle::random_poly(rng, vars, 3, 2);
    MPoly b = oracle::random_poly(rng, vars, 3, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    MPoly d = gcd(g * a, g * b);
    EXPECT_TRUE((g * a).divide_exact(d).has_value());
    EXPECT_TRUE((g * b).divide_exact(d).has_value());
    EXPECT_TRUE(d.divide_exact(g.monic()).has_value()) << d.to_string() << " vs " << g.to_string();
  }
}

TEST(MPoly, GcdOfCoprimeIsOne) {
  MPoly s = MPoly::var(Var::s), t = MPoly::var(Var::t), q = MPoly::var(Var::q);
  EXPECT_TRUE(gcd(s + t, s - t).is_one());
  EXPECT_TRUE(gcd(s * q + MPoly(1), t).is_one());
  EXPECT_EQ(gcd(s * s * t, s * t * t), s * t);
}

TEST(RatFunc, CanonicalForm) {
  RatFunc a(MPoly::var(Var::s) * MPoly::var(Var::s) - MPoly::var(Var::t) * MPoly::var(Var::t),
            MPoly(2) * (MPoly::var(Var::s) + MPoly::var(Var::t)));
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ(a, RatFunc(BigRat(1, 2)) * (S() - T()));
  RatFunc b = RatFunc(1) / (S() + T()) + RatFunc(1) / (S() - T());
  EXPECT_EQ(b, RatFunc(2) * S() / (S() * S() - T() * T()));
  EXPECT_TRUE(b.den().leading_coefficient().is_one());
  EXPECT_EQ((-T()).pow(-1), RatFunc(-1) / T());
  EXPECT_THROW(RatFunc(0).inverse(), DivisionByZero);
}

TEST(RatFunc, FieldAxiomsRandomized) {
  std::mt19937_64 rng(11);
  std::vector<Var> vars = {Var::s, Var::t};
  for (int trial = 0; trial < 30; ++trial) {
    RatFunc a(oracle::random_poly(rng, vars, 3, 2), oracle::random_poly(rng, vars, 2, 2) + MPoly(7));
    RatFunc b(oracle::random_poly(rng, vars, 3, 2), oracle::random_poly(rng, vars, 2, 1) + MPoly(3));
    RatFunc c(oracle::random_poly(rng, vars, 2, 2));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, RatFunc(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), RatFunc(1));
  }
}

TEST(RatFunc, Laurent) {
  RatFunc x = RatFunc::var(Var::x);
  RatFunc f = (S() * x * x + T() / x) / (S() + RatFunc(1));
  auto terms = f.laurent_in(Var::x);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms.at(2), S() / (S() + RatFunc(1)));
  EXPECT_EQ(terms.at(-1), T() / (S() + RatFunc(1)));
  EXPECT_EQ(RatFunc::from_laurent(Var::x, terms), f);
  EXPECT_THROW((RatFunc(1) / (RatFunc(1) - x)).laurent_in(Var::x), DomainError);
}

TEST(QuadExt, PhiIdentities) {
  auto ctx = STContext::symbolic();
  QuadExt phi = ctx->phi(), phip = ctx->phi_prime();
  EXPECT_EQ(phi * phip, QuadExt(-T()));
  EXPECT_EQ(phi + phip, QuadExt(S()));
  EXPECT_EQ(phi - phip, QuadExt::delta(ctx->disc_ptr()));
  EXPECT_EQ(phi.conj(), phip);
  // phi^2 = (s^2/2 + t) + (s/2) delta
  QuadExt sq(S() * S() * RatFunc(BigRat(1, 2)) + T(), S() * RatFunc(BigRat(1, 2)), ctx->disc_ptr());
  EXPECT_EQ(phi.pow(2), sq);
  EXPECT_TRUE((phi.pow(2) - QuadExt(S()) * phi - QuadExt(T())).is_zero());
  EXPECT_EQ(phi.pow(3), QuadExt(S()) * phi.pow(2) + QuadExt(T()) * phi);
  EXPECT_EQ(QuadExt::delta(ctx->disc_ptr()).pow(2), QuadExt(S() * S() + RatFunc(4) * T()));
}

TEST(QuadExt, SymmetricFunctionsAreRational) {
  auto ctx = STContext::symbolic();
  QuadExt phi = ctx->phi(), phip = ctx->phi_prime();
  QuadExt delta = QuadExt::delta(ctx->disc_ptr());
  for (int n = 0; n <= 8; ++n) {
    EXPECT_TRUE((phi.pow(n) + phip.pow(n)).delta_part().is_zero());
    QuadExt f = (phi.pow(n) - phip.pow(n)) / delta;
    EXPECT_TRUE(f.delta_part().is_zero());
    EXPECT_EQ(f.symmetric_part(), ctx->fib(n));
    QuadExt sum;
    for (int k = 0; k <= n; ++k) sum += phi.pow(k) * phip.pow(n - k);
    EXPECT_TRUE(sum.delta_part().is_zero());
  }
}

TEST(QuadExt, ConjIsAutomorphism) {
  auto ctx = STContext::symbolic();
  std::mt19937_64 rng(3);
  std::vector<Var> vars = {Var::s, Var::t};
  for (int trial = 0; trial < 20; ++trial) {
    QuadExt a(RatFunc(oracle::random_poly(rng, vars, 3, 2)), RatFunc(oracle::random_poly(rng, vars, 2, 2)),
              ctx->disc_ptr());
    QuadExt b(RatFunc(oracle::random_poly(rng, vars, 3, 2)), RatFunc(oracle::random_poly(rng, vars, 2, 2)),
              ctx->disc_ptr());
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_TRUE((a * a.conj()).delta_part().is_zero());
    EXPECT_EQ(a * (b + a), a * b + a * a);
    if (!a.norm().is_zero()) EXPECT_EQ(a * a.inverse(), QuadExt(1));
  }
}

TEST(QuadExt, MismatchedDiscriminantsThrow) {
  auto a = STContext::symbolic();
  auto b = STContext::specialized(1, 1);
  EXPECT_THROW(a->phi() * b->phi(), RingMismatch);
}

TEST(EvalAt, SpecializedValues) {
  auto ctx = STContext::symbolic();
  EXPECT_EQ(eval_at(ctx->fib(5), 1, 1), BigRat(5));
  EXPECT_EQ(eval_at(ctx->fib(5), 3, -2), BigRat(31));
  ExtNumeric g = eval_at(ctx->phi(), 1, 1);
  EXPECT_FALSE(g.exact);
  EXPECT_NEAR(g.as_double, 1.6180339887498949, 1e-15);
  EXPECT_EQ(g.approx.substr(0, 12), "1.6180339887");
  ExtNumeric m = eval_at(ctx->phi(), 3, -2);
  EXPECT_TRUE(m.exact);
  EXPECT_EQ(m.value, BigRat(2));
  EXPECT_THROW(eval_at(RatFunc(1) / T(), 1, 0), PoleError);
}

TEST(EvalAt, CommutesWithOperations) {
  std::mt19937_64 rng(5);
  std::vector<Var> vars = {Var::s, Var::t};
  for (int trial = 0; trial < 30; ++trial) {
    RatFunc a(oracle::random_poly(rng, vars, 3, 3));
    RatFunc b(oracle::random_poly(rng, vars, 3, 3), oracle::random_poly(rng, vars, 2, 2) + MPoly(11));
    BigRat s0 = oracle::random_rational(rng), t0 = oracle::random_rational(rng);
    BigRat ea = eval_at(a, s0, t0), eb;
    try {
      eb = eval_at(b, s0, t0);
    } catch (const PoleError&) {
      continue;
    }
    EXPECT_EQ(eval_at(a * b, s0, t0), ea * eb);
    EXPECT_EQ(eval_at(a + b, s0, t0), ea + eb);
  }
}
