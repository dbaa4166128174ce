#pragma once

#include <functional>

#include "stcalc/series.hpp"

namespace stcalc {

// Coefficients are rational functions; the series variable eps counts the
// degree in whichever arguments the caller marks as graded.
using RSeries = Series<RatFunc>;

struct DeformParams {
  RatFunc u{1};
  RatFunc v{1};
  RatFunc w{1};
};

// sum_{n<=N} u^C(n,2) z^n / fib(n)!; 1 + z when u = 0.
RSeries deformed_exp(const STContext& ctx, const RatFunc& z, const RatFunc& u, int order);

// sum_n {alpha,n} u^C(alpha-n,2) v^C(n,2) x^(alpha-n) Y_n where Y_n stands for
// the n-th power of the second argument and must have valuation >= n when
// alpha < 0.
RSeries binom_expand(const STContext& ctx, const RatFunc& x, long alpha, const RatFunc& u,
                     const RatFunc& v, int order, const std::function<RSeries(long)>& ypow);

// (x (+)_{u,v} y)^(alpha) with y graded.
RSeries deformed_binom(const STContext& ctx, const RatFunc& x, const RatFunc& y, long alpha,
                       const RatFunc& u, const RatFunc& v, int order);
// (x (-)_{u,v} y)^(alpha): y replaced by -y.
RSeries deformed_binom_minus(const STContext& ctx, const RatFunc& x, const RatFunc& y, long alpha,
                             const RatFunc& u, const RatFunc& v, int order);

// (L (+)_{p1,pv} (M (+)_{p2,p3} R))^(alpha), M and R graded.
RSeries trinom_right(const STContext& ctx, const RatFunc& L, const RatFunc& M, const RatFunc& R,
                     const RatFunc& p1, const RatFunc& p2, const RatFunc& p3, long alpha, int order,
                     const RatFunc& pv = RatFunc(1));
// ((L (+)_{p1,p2} M) (+)_{1,p3} R)^(alpha), M and R graded.
RSeries trinom_left(const STContext& ctx, const RatFunc& L, const RatFunc& M, const RatFunc& R,
                    const RatFunc& p1, const RatFunc& p2, const RatFunc& p3, long alpha, int order);

// (x (+)_{u,1} (y (+)_{v,w} z))^(alpha)
RSeries deformed_trinom(const STContext& ctx, const RatFunc& x, const RatFunc& y, const RatFunc& z,
                        const DeformParams& p, long alpha, int order);

// (T_{u^-1} D) acting on the variable `var` of a Laurent coefficient.
RatFunc shifted_derivative(const STContext& ctx, const RatFunc& f, Var var, const RatFunc& uinv);

// e(y T_{u^-1} D, v) applied to `target`, D acting on `var`. Each application
// moves the result by `degree_shift` in the series variable.
RSeries translation_apply(const STContext& ctx, const RSeries& target, Var var, const RatFunc& y,
                          const RatFunc& u, const RatFunc& v, int degree_shift = 1);

// sum_{n<=N} q^C(n,2) X^n
RSeries theta_partial(const RatFunc& q, int order);

enum class ThetaMode { closed, direct };

// n-th (s,t)-derivative of the partial theta function, to order N - n.
RSeries theta_deriv(const STContext& ctx, long n, ThetaMode mode, const RatFunc& q, int order);

}  // namespace stcalc
