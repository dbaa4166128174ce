#include <sstream>

#include "common.hpp"
#include "stcalc/qrs.hpp"

namespace stcalc::cli {

using detail::json;

namespace {

ContextPtr st_context(const EvalRequest& req) {
  RatFunc s = parse_param(req.s, Var::s);
  RatFunc t = parse_param(req.t, Var::t);
  if (s == RatFunc::var(Var::s) && t == RatFunc::var(Var::t)) return STContext::symbolic();
  return STContext::custom(s, t);
}

std::string series_text(const std::vector<std::string>& terms, const std::string& var, int order) {
  return detail::join_terms(terms) + " + O(" + detail::power(var, order + 1) + ")";
}

// sum_n {n+d,d} x^n = 1 / (phi^d x; qhat)_(d+1); the denominator expands to
// sum_j (-1)^j (-t)^C(j,2) {d+1,j} x^j, and the product form is used when
// phi is defined.
std::vector<RatFunc> simplicial_denominator(const STContext& ctx, long d) {
  std::vector<RatFunc> out;
  if (!ctx.degenerate()) {
    std::vector<QuadExt> p = {QuadExt(1)};
    for (long k = 0; k <= d; ++k) {
      QuadExt a = ctx.phi_pow(d - k) * ctx.phi_prime_pow(k);
      std::vector<QuadExt> next(p.size() + 1, QuadExt(0));
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i] += p[i];
        next[i + 1] -= a * p[i];
      }
      p = std::move(next);
    }
    for (const auto& c : p) {
      if (!c.is_rational()) throw Error("denominator has a non-zero delta part");
      out.push_back(c.symmetric_part());
    }
    return out;
  }
  for (long j = 0; j <= d + 1; ++j) {
    RatFunc c = ring_pow(-ctx.t(), j * (j - 1) / 2) * ctx.binom(d + 1, j);
    out.push_back(j % 2 ? -c : c);
  }
  return out;
}

}  // namespace

EvalResult compute_eval(const EvalRequest& req) {
  if (req.order < 0 || req.order > kMaxOrder) {
    throw UsageError("--order must lie in [0, " + std::to_string(kMaxOrder) + "]");
  }
  EvalResult r;
  r.expr = req.expr;
  r.arg = req.arg;

  if (req.expr == "rs-poly") {
    if (req.arg < 0 || req.arg > kMaxN) throw UsageError("rs-poly n must lie in [0, " + std::to_string(kMaxN) + "]");
    RatFunc q = parse_param(req.q, Var::q);
    RSPoly p = rogers_szego_r(req.arg, q);
    r.variable = "x";
    r.text = p.to_string();
    for (const auto& c : p.coeffs) r.coefficients.push_back(c.to_string());
    r.extra.emplace_back("q", q.to_string());
    return r;
  }

  if (req.expr == "theta-deriv") {
    if (req.arg < 0 || req.arg > req.order) throw UsageError("theta-deriv n must lie in [0, order]");
    RatFunc q = parse_param(req.q, Var::q);
    auto ctx = st_context(req);
    RSeries f = theta_deriv(*ctx, req.arg, ThetaMode::closed, q, req.order);
    r.order = f.order();
    r.variable = "x";
    std::vector<std::string> terms;
    for (int k = 0; k <= f.order(); ++k) {
      terms.push_back(detail::term(f[k], detail::power("x", k)));
      r.coefficients.push_back(f[k].to_string());
    }
    r.text = series_text(terms, "x", f.order());
    r.extra.emplace_back("q", q.to_string());
    r.extra.emplace_back("context", ctx->describe());
    return r;
  }

  if (req.expr == "binom-series") {
    if (std::labs(req.arg) > kMaxN) throw UsageError("binom-series alpha out of range");
    auto ctx = st_context(req);
    RatFunc u = parse_param(req.u, Var::u), v = parse_param(req.v, Var::v);
    RSeries f = deformed_binom(*ctx, RatFunc::var(Var::x), RatFunc::var(Var::y), req.arg, u, v, req.order);
    r.order = f.order();
    r.variable = "y";
    std::vector<std::string> terms;
    for (int k = 0; k <= f.order(); ++k) {
      if (!f[k].is_zero()) terms.push_back(detail::wrap(f[k].to_string()));
      r.coefficients.push_back(f[k].to_string());
    }
    r.text = req.arg >= 0 && req.arg <= req.order ? detail::join_terms(terms) : series_text(terms, "y", f.order());
    r.extra.emplace_back("context", ctx->describe());
    r.extra.emplace_back("u", u.to_string());
    r.extra.emplace_back("v", v.to_string());
    return r;
  }

  if (req.expr == "polytopic-ogf") {
    if (req.arg < 0 || req.arg > kMaxD) throw UsageError("polytopic-ogf d must lie in [0, " + std::to_string(kMaxD) + "]");
    auto ctx = st_context(req);
    const long d = req.arg;
    RSeries f(req.order);
    for (int n = 0; n <= req.order; ++n) f.set(n, ctx->binom(n + d, d));
    auto den = simplicial_denominator(*ctx, d);
    RSeries check = f * RSeries::from(std::vector<RatFunc>(den.begin(),
                                                          den.begin() + std::min<long>(static_cast<long>(den.size()),
                                                                                       req.order + 1)),
                                      req.order);
    bool ok = check == RSeries::constant(RatFunc(1), req.order);
    r.order = req.order;
    r.variable = "x";
    std::vector<std::string> terms, dterms;
    for (int k = 0; k <= req.order; ++k) {
      terms.push_back(detail::term(f[k], detail::power("x", k)));
      r.coefficients.push_back(f[k].to_string());
    }
    for (long k = static_cast<long>(den.size()) - 1; k >= 0; --k) {
      dterms.push_back(detail::term(den[static_cast<std::size_t>(k)], detail::power("x", k)));
    }
    r.text = series_text(terms, "x", req.order);
    r.extra.emplace_back("denominator", detail::join_terms(dterms));
    r.extra.emplace_back("series_times_denominator", ok ? "1" : "differs from 1");
    r.extra.emplace_back("context", ctx->describe());
    if (!ok) throw Error("series does not invert the denominator");
    return r;
  }

  throw UsageError("unknown expression '" + req.expr + "' (theta-deriv, rs-poly, binom-series, polytopic-ogf)");
}

std::string render_eval(const EvalResult& r, Format f) {
  std::ostringstream os;
  if (f == Format::json) {
    json j = {{"kind", "eval"}, {"expr", r.expr}, {"arg", r.arg}, {"variable", r.variable}, {"text", r.text}};
    j["order"] = r.order < 0 ? json(nullptr) : json(r.order);
    j["coefficients"] = r.coefficients;
    json extra = json::object();
    for (const auto& [k, v] : r.extra) extra[k] = v;
    j["params"] = extra;
    os << j.dump(2) << "\n";
  } else if (f == Format::csv) {
    os << "power,coefficient\n";
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
      os << i << "," << detail::csv_field(r.coefficients[i]) << "\n";
    }
  } else {
    os << r.text << "\n";
    for (const auto& [k, v] : r.extra) os << "  " << k << ": " << v << "\n";
  }
  return os.str();
}

}  // namespace stcalc::cli
