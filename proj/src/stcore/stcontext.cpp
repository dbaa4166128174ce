#include <sstream>

#include "stcalc/errors.hpp"
#include "stcalc/stcore.hpp"

namespace stcalc {

STContext::STContext(Mode mode, RatFunc s, RatFunc t)
    : mode_(mode),
      s_(std::move(s)),
      t_(std::move(t)),
      disc_(std::make_shared<const RatFunc>(s_ * s_ + RatFunc(4) * t_)) {
  fib_ = {RatFunc(0), RatFunc(1)};
  fact_ = {RatFunc(1)};
}

ContextPtr STContext::symbolic() {
  return ContextPtr(new STContext(Mode::symbolic, RatFunc::var(Var::s), RatFunc::var(Var::t)));
}

ContextPtr STContext::specialized(const BigRat& s0, const BigRat& t0) {
  return ContextPtr(new STContext(Mode::specialized, RatFunc(s0), RatFunc(t0)));
}

ContextPtr STContext::qnumber(const RatFunc& q) {
  return ContextPtr(new STContext(Mode::qnumber, RatFunc(1) + q, -q));
}

ContextPtr STContext::custom(const RatFunc& s, const RatFunc& t) {
  return ContextPtr(new STContext(Mode::custom, s, t));
}

std::string STContext::describe() const {
  std::ostringstream os;
  os << "(s,t)=(" << s_.to_string() << "," << t_.to_string() << ")";
  return os.str();
}

QuadExt STContext::phi() const {
  if (degenerate()) throw DomainError("phi undefined: s^2+4t = 0 at " + describe());
  return QuadExt(s_ * RatFunc(BigRat(1, 2)), RatFunc(BigRat(1, 2)), disc_);
}

QuadExt STContext::phi_prime() const {
  if (degenerate()) throw DomainError("phi' undefined: s^2+4t = 0 at " + describe());
  return QuadExt(s_ * RatFunc(BigRat(1, 2)), RatFunc(BigRat(-1, 2)), disc_);
}

QuadExt STContext::phi_pow(long k) const {
  std::lock_guard lock(mu_);
  auto it = phi_pows_.find(k);
  if (it != phi_pows_.end()) return it->second;
  QuadExt r;
  if (k == 0) {
    r = QuadExt(RatFunc(1), RatFunc(0), disc_);
  } else if (k > 0) {
    r = phi_pow(k - 1) * phi();
  } else {
    // phi^{-1} = -phi'/t
    r = phi_pow(k + 1) * (-phi_prime() * QuadExt(t_.inverse()));
  }
  phi_pows_.emplace(k, r);
  return r;
}

QuadExt STContext::phi_prime_pow(long k) const {
  std::lock_guard lock(mu_);
  auto it = phi_prime_pows_.find(k);
  if (it != phi_prime_pows_.end()) return it->second;
  QuadExt r;
  if (k == 0) {
    r = QuadExt(RatFunc(1), RatFunc(0), disc_);
  } else if (k > 0) {
    r = phi_prime_pow(k - 1) * phi_prime();
  } else {
    r = phi_prime_pow(k + 1) * (-phi() * QuadExt(t_.inverse()));
  }
  phi_prime_pows_.emplace(k, r);
  return r;
}

QuadExt STContext::qhat() const { return phi_prime() * phi_pow(-1); }

RatFunc STContext::fib(long n) const {
  std::lock_guard lock(mu_);
  if (n < 0) {
    auto it = neg_fib_.find(n);
    if (it != neg_fib_.end()) return it->second;
    RatFunc r = -((-t_).pow(n) * fib(-n));
    neg_fib_.emplace(n, r);
    return r;
  }
  while (static_cast<long>(fib_.size()) <= n) {
    std::size_t m = fib_.size();
    fib_.push_back(s_ * fib_[m - 1] + t_ * fib_[m - 2]);
  }
  return fib_[static_cast<std::size_t>(n)];
}

RatFunc STContext::fib_factorial(long n) const {
  if (n < 0) throw DomainError("factorial of negative index");
  std::lock_guard lock(mu_);
  while (static_cast<long>(fact_.size()) <= n) {
    long m = static_cast<long>(fact_.size());
    fact_.push_back(fact_.back() * fib(m));
  }
  return fact_[static_cast<std::size_t>(n)];
}

RatFunc STContext::binom(long alpha, long k) const {
  if (k < 0) throw DomainError("Fibonomial with negative lower index");
  if (alpha >= 0 && k > alpha) return RatFunc(0);
  if (k == 0) return RatFunc(1);
  std::lock_guard lock(mu_);
  auto key = std::make_pair(alpha, k);
  auto it = binom_.find(key);
  if (it != binom_.end()) return it->second;
  RatFunc r;
  if (alpha >= 0) {
    RatFunc num(1);
    for (long i = 0; i < k; ++i) num *= fib(alpha - i);
    RatFunc den = fib_factorial(k);
    if (num.is_polynomial() && den.is_polynomial()) {
      auto q = num.num().divide_exact(den.num());
      if (!q) {
        throw IntegralityError("Fibonomial {" + std::to_string(alpha) + "," + std::to_string(k) +
                               "} is not a polynomial");
      }
      r = RatFunc(*q);
    } else {
      r = num / den;
    }
  } else {
    long m = -alpha;
    long e = -m * k - k * (k - 1) / 2;
    r = (-t_).pow(e) * binom(m + k - 1, k);
    if (k % 2 != 0) r = -r;
  }
  binom_.emplace(key, r);
  return r;
}

}  // namespace stcalc
