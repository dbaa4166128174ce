#pragma once

// Independent reference computations for the unit tests. None of these call
// into the library's Fibonomial or q-series code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "stcalc/ratfunc.hpp"

namespace oracle {

// Integer (s,t)-Fibonacci sequence by the plain recurrence.
inline std::vector<mpz_class> fib_sequence(long s, long t, int count) {
  std::vector<mpz_class> f = {0, 1};
  while (static_cast<int>(f.size()) < count) {
    std::size_t m = f.size();
    f.push_back(s * f[m - 1] + t * f[m - 2]);
  }
  f.resize(static_cast<std::size_t>(count));
  return f;
}

// Coefficients of the Gaussian binomial [n,k]_q by counting k-subsets of
// {0..n-1} according to sum - C(k,2).
inline std::vector<long> gaussian_by_subsets(int n, int k) {
  std::vector<long> coeffs(static_cast<std::size_t>(k * (n - k) + 1), 0);
  if (k < 0 || k > n) return {0};
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += i;
    }
    coeffs[static_cast<std::size_t>(sum - k * (k - 1) / 2)] += 1;
  }
  return coeffs;
}

inline stcalc::RatFunc poly_in_q(const std::vector<long>& coeffs) {
  stcalc::MPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p += stcalc::MPoly(coeffs[i]) * stcalc::MPoly::var(stcalc::Var::q, static_cast<unsigned>(i));
  }
  return stcalc::RatFunc(p);
}

// Random polynomial with small integer coefficients in the given variables.
inline stcalc::MPoly random_poly(std::mt19937_64& rng, const std::vector<stcalc::Var>& vars,
                                 int max_terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg), nterms(1, max_terms);
  stcalc::MPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    stcalc::MPoly m(coef(rng));
    for (auto v : vars) m *= stcalc::MPoly::var(v, static_cast<unsigned>(deg(rng)));
    p += m;
  }
  return p;
}

inline stcalc::BigRat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 9), sgn(0, 1);
  long n = d(rng) * (sgn(rng) ? 1 : -1);
  return stcalc::BigRat(mpz_class(n), mpz_class(d(rng)));
}

}  // namespace oracle
