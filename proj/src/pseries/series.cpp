#include "stcalc/series.hpp"

namespace stcalc {

Series<QuadExt> st_derive_functional(const Series<QuadExt>& f, const STContext& ctx) {
  if (f.order() == 0) return Series<QuadExt>(0);
  Series<QuadExt> diff = f.scale_arg(ctx.phi()) - f.scale_arg(ctx.phi_prime());
  if (!diff[0].is_zero()) throw DomainError("divided difference has a nonzero constant term");
  QuadExt inv = (ctx.phi() - ctx.phi_prime()).inverse();
  Series<QuadExt> r(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) r.set(n - 1, diff[n] * inv);
  return r;
}

}  // namespace stcalc
