#include <sstream>

#include "cases.hpp"

namespace stcalc::verify {

std::string value_to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

Items items(const Series<RatFunc>& s) { return items(s.coeffs()); }
Items items(const Series<QuadExt>& s) { return items(s.coeffs()); }

Items items(const std::vector<RatFunc>& v) { return Items(v.begin(), v.end()); }
Items items(const std::vector<QuadExt>& v) { return Items(v.begin(), v.end()); }
Items items(const std::vector<BigRat>& v) { return Items(v.begin(), v.end()); }

void append(Items& dst, const Items& src) { dst.insert(dst.end(), src.begin(), src.end()); }

namespace {

bool same_ring(const QuadExt& a, const QuadExt& b) {
  if (a.is_rational() || b.is_rational()) return true;
  const auto& da = a.disc();
  const auto& db = b.disc();
  return da == db || *da == *db;
}

}  // namespace

std::optional<Divergence> compare(const Items& a, const Items& b) {
  if (a.size() != b.size()) {
    throw DomainError("item counts differ: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index() != b[i].index()) {
      throw RingMismatch("items at index " + std::to_string(i) + " live in different rings");
    }
    bool equal = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b[i]);
          if constexpr (std::is_same_v<T, QuadExt>) {
            if (!same_ring(x, y)) {
              throw RingMismatch("quadratic items at index " + std::to_string(i) +
                                 " use different discriminants");
            }
          }
          return x == y;
        },
        a[i]);
    if (!equal) return Divergence{i, value_to_string(a[i]), value_to_string(b[i])};
  }
  return std::nullopt;
}

std::string ring_name(RingReq r) {
  switch (r) {
    case RingReq::integer:
      return "integer";
    case RingReq::ratfunc:
      return "ratfunc";
    case RingReq::quadext:
      return "quadext";
  }
  return "?";
}

RatFunc Env::operator()(Var v) const {
  auto it = values.find(v);
  return it == values.end() ? RatFunc::var(v) : it->second;
}

ContextPtr Env::st() const {
  if (!values.count(Var::s) && !values.count(Var::t)) return STContext::symbolic();
  return STContext::custom((*this)(Var::s), (*this)(Var::t));
}

ContextPtr Env::qctx() const { return STContext::qnumber((*this)(Var::q)); }

namespace cases {

RatFunc binom_poly(const STContext& ctx, const RatFunc& a, const RatFunc& b, long n,
                   const RatFunc& u, const RatFunc& v) {
  RatFunc r;
  for (long j = 0; j <= n; ++j) {
    r += ctx.binom(n, j) * ring_pow(u, c2(n - j)) * ring_pow(v, c2(j)) * ring_pow(a, n - j) *
         ring_pow(b, j);
  }
  return r;
}

RatFunc q_difference_pow(const RatFunc& p, Var x, const RatFunc& q, long k) {
  RatFunc r = p;
  for (long i = 0; i < k; ++i) r = q_difference_in(r, x, q);
  return r;
}

QS lift(const RS& f) {
  return f.map([](const RatFunc& c) { return QuadExt(c); });
}

}  // namespace cases

}  // namespace stcalc::verify
