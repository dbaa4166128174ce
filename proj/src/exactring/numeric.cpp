#include "stcalc/numeric.hpp"

#include <mpfr.h>

#include <map>
#include <memory>

#include "stcalc/errors.hpp"

namespace stcalc {

namespace {

struct Mpfr {
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_t v;
};

std::string render(const mpfr_t v, unsigned digits) {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

BigRat eval_at(const RatFunc& x, const BigRat& s0, const BigRat& t0) {
  RatFunc r = x.evaluate({{Var::s, s0}, {Var::t, t0}});
  if (!r.is_constant()) throw DomainError("value depends on more than s and t: " + r.to_string());
  return r.constant_value();
}

ExtNumeric eval_at(const QuadExt& x, const BigRat& s0, const BigRat& t0, unsigned bits) {
  BigRat a = eval_at(x.symmetric_part(), s0, t0);
  ExtNumeric out;
  out.precision_bits = bits;
  if (x.is_rational()) {
    out.exact = true;
    out.value = a;
    out.as_double = a.to_double();
    out.approx = a.to_string();
    return out;
  }
  BigRat b = eval_at(x.delta_part(), s0, t0);
  BigRat d = eval_at(*x.disc(), s0, t0);
  BigRat root;
  if (rational_sqrt(d, root)) {
    out.exact = true;
    out.value = a + b * root;
    out.as_double = out.value.to_double();
    out.approx = out.value.to_string();
    return out;
  }
  if (d.sign() < 0) throw DomainError("negative discriminant has no real square root");
  mpfr_prec_t work = static_cast<mpfr_prec_t>(bits) + 64;
  Mpfr md(work), ma(work), mb(work), res(static_cast<mpfr_prec_t>(bits));
  mpfr_set_q(md.v, d.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(md.v, md.v, MPFR_RNDN);
  mpfr_set_q(mb.v, b.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_mul(md.v, md.v, mb.v, MPFR_RNDN);
  mpfr_set_q(ma.v, a.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_add(ma.v, ma.v, md.v, MPFR_RNDN);
  mpfr_set(res.v, ma.v, MPFR_RNDN);
  out.exact = false;
  out.as_double = mpfr_get_d(res.v, MPFR_RNDN);
  out.approx = render(res.v, 30);
  return out;
}

}  // namespace stcalc
