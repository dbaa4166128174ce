#include "cases.hpp"

namespace stcalc::verify::cases {

namespace {

RatFunc coefficient_sum(const RS& f) {
  RatFunc r;
  for (const auto& c : f.coeffs()) r += c;
  return r;
}

// The twelve bracketings of the trinomial series, in the order they are
// listed: 1-4 lead with x, 5-8 with y, 9-12 with z.
std::vector<RS> twelve_forms(const Env& e, long alpha) {
  auto ctx = e.st();
  RatFunc x = e(Var::x), y = e(Var::y), z = e(Var::z);
  RatFunc u = e(Var::u), v = e(Var::v), w = e(Var::w);
  const int N = e.order;
  return {
      trinom_right(*ctx, x, y, z, u, v, w, alpha, N), trinom_left(*ctx, x, y, z, u, v, w, alpha, N),
      trinom_right(*ctx, x, z, y, u, w, v, alpha, N), trinom_left(*ctx, x, z, y, u, w, v, alpha, N),
      trinom_left(*ctx, y, x, z, v, u, w, alpha, N),  trinom_right(*ctx, y, x, z, v, u, w, alpha, N),
      trinom_right(*ctx, y, z, x, v, w, u, alpha, N), trinom_left(*ctx, y, z, x, v, w, u, alpha, N),
      trinom_right(*ctx, z, x, y, w, u, v, alpha, N), trinom_left(*ctx, z, x, y, w, u, v, alpha, N),
      trinom_right(*ctx, z, y, x, w, v, u, alpha, N), trinom_left(*ctx, z, y, x, w, v, u, alpha, N),
  };
}

}  // namespace

void register_trinomial(std::vector<TheoremCase>& out) {
  const std::vector<Var> all = {Var::s, Var::t, Var::u, Var::v, Var::w, Var::x, Var::y, Var::z};

  for (long alpha : {0L, 1L, 2L, 3L, -1L, -2L}) {
    std::string tag = alpha < 0 ? "m" + std::to_string(-alpha) : std::to_string(alpha);
    auto& c = add(
        out, "s4.trinomial_assoc.alpha_" + tag, "4",
        "(x (+)_{u,1} (y (+)_{v,w} z))^(alpha) agrees with the eleven other bracketings", RingReq::ratfunc, all,
        [alpha](const Env& e) {
          auto f = twelve_forms(e, alpha);
          Items r;
          if (alpha >= 0) {
            for (int i = 1; i < 12; ++i) r.emplace_back(coefficient_sum(f[0]));
          } else {
            for (int lead : {0, 4, 8}) {
              for (int i = 0; i < 3; ++i) append(r, items(f[lead]));
            }
          }
          return r;
        },
        [alpha](const Env& e) {
          auto f = twelve_forms(e, alpha);
          Items r;
          for (int i = 1; i < 12; ++i) {
            if (alpha >= 0) {
              r.emplace_back(coefficient_sum(f[i]));
            } else if (i % 4 != 0) {
              append(r, items(f[i]));
            }
          }
          return r;
        });
    c.note = alpha >= 0 ? "finite sums compared as polynomials"
                        : "series graded by the two inner arguments; compared within each leading variable";
  }

  auto minus_right = [](bool corrected) {
    return [corrected](const Env& e) {
      auto ctx = e.st();
      RatFunc x = e(Var::x), y = e(Var::y), z = e(Var::z), u = e(Var::u), v = e(Var::v), w = e(Var::w);
      Items r;
      for (long a : {2L, 3L, -1L}) {
        append(r, items(corrected ? trinom_right(*ctx, x, -y, -z, u, v, w, a, e.order)
                                  : trinom_right(*ctx, x, -y, -z, u, RatFunc(1), w, a, e.order, v)));
      }
      return r;
    };
  };
  auto minus_left = [](const Env& e) {
    auto ctx = e.st();
    RatFunc x = e(Var::x), y = e(Var::y), z = e(Var::z);
    Items r;
    for (long a : {2L, 3L, -1L}) {
      append(r, items(trinom_left(*ctx, x, -y, -z, e(Var::u), e(Var::v), e(Var::w), a, e.order)));
    }
    return r;
  };
  printed_form(
      add(out, "s4.minus_variant.printed", "4", "(x (-)_{u,v} (y (+)_{1,w} z))^(alpha) = ((x (-)_{u,v} y) (-)_{1,w} z)^(alpha)",
          RingReq::ratfunc, all, minus_right(false), minus_left),
      "the inner deformation must be (v,w) with outer (u,1), not an outer (u,v) with inner (1,w)");
  add(out, "s4.minus_variant.corrected", "4",
      "(x (-)_{u,1} (y (+)_{v,w} z))^(alpha) = ((x (-)_{u,v} y) (-)_{1,w} z)^(alpha)", RingReq::ratfunc, all,
      minus_right(true), minus_left);

  add(out, "s4.translation_theorem", "4",
      "(x (+)_{u,1} (y (+)_{v,w} z))^(alpha) = e(z T_{v^-1} D, w) {(x (+)_{u,v} y)^(alpha)}", RingReq::ratfunc,
      {Var::s, Var::t, Var::u, Var::v, Var::w, Var::x, Var::z},
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : {2L, 3L, -1L, -2L}) {
          append(r, items(trinom_right(*ctx, e(Var::x), V(Var::y), e(Var::z), e(Var::u), e(Var::v), e(Var::w), a,
                                       e.order)));
        }
        return r;
      },
      [](const Env& e) {
        auto ctx = e.st();
        Items r;
        for (long a : {2L, 3L, -1L, -2L}) {
          RS target = deformed_binom(*ctx, e(Var::x), V(Var::y), a, e(Var::u), e(Var::v), e.order);
          append(r, items(translation_apply(*ctx, target, Var::y, e(Var::z), e(Var::v), e(Var::w), 0)));
        }
        return r;
      })
      .note = "D acts on y; graded by total degree in (y, z)";
}

}  // namespace stcalc::verify::cases
