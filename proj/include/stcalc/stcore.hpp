#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "stcalc/quadext.hpp"

namespace stcalc {

class STContext;
using ContextPtr = std::shared_ptr<const STContext>;

// The parameter pair (s, t) together with memoized Fibonacci data.
class STContext {
 public:
  enum class Mode { symbolic, specialized, qnumber, custom };

  static ContextPtr symbolic();
  static ContextPtr specialized(const BigRat& s0, const BigRat& t0);
  // s = 1 + q, t = -q, so that fib(n) = [n]_q.
  static ContextPtr qnumber(const RatFunc& q);
  static ContextPtr custom(const RatFunc& s, const RatFunc& t);

  Mode mode() const { return mode_; }
  const RatFunc& s() const { return s_; }
  const RatFunc& t() const { return t_; }
  const RatFunc& disc() const { return *disc_; }
  const QuadExt::Disc& disc_ptr() const { return disc_; }
  bool degenerate() const { return disc_->is_zero(); }
  std::string describe() const;

  // Throw DomainError on a degenerate context.
  QuadExt phi() const;
  QuadExt phi_prime() const;
  QuadExt phi_pow(long k) const;
  QuadExt phi_prime_pow(long k) const;
  QuadExt qhat() const;

  RatFunc fib(long n) const;
  RatFunc fib_factorial(long n) const;
  RatFunc binom(long alpha, long k) const;

 private:
  STContext(Mode mode, RatFunc s, RatFunc t);

  Mode mode_;
  RatFunc s_;
  RatFunc t_;
  QuadExt::Disc disc_;

  mutable std::recursive_mutex mu_;
  mutable std::vector<RatFunc> fib_;
  mutable std::map<long, RatFunc> neg_fib_;
  mutable std::vector<RatFunc> fact_;
  mutable std::map<std::pair<long, long>, RatFunc> binom_;
  mutable std::map<long, QuadExt> phi_pows_;
  mutable std::map<long, QuadExt> phi_prime_pows_;
};

RatFunc fib(const STContext& ctx, long n);
// Independent route for negative indices: run the recurrence backwards.
RatFunc fib_backward(const STContext& ctx, long n);
// n (s/2)^(n-1), the value of fib on the locus s^2 + 4t = 0.
RatFunc fib_confluent(const STContext& ctx, long n);
RatFunc fib_factorial(const STContext& ctx, long n);

// Fibonomial {alpha over k}. Negative alpha uses the reflection formula.
RatFunc st_binom(const STContext& ctx, long alpha, long k);
// Product/quotient definition with negative Fibonacci values (second route).
RatFunc st_binom_product(const STContext& ctx, long alpha, long k);

// phi^k {a,k} + phi'^(a+1-k) {a,k-1}
QuadExt pascal_left(const STContext& ctx, long alpha, long k);
// phi'^k {a,k} + phi^(a+1-k) {a,k-1}
QuadExt pascal_right(const STContext& ctx, long alpha, long k);

// {n+d-1 over d}
RatFunc polytopic(const STContext& ctx, long n, long d);

struct Specialization {
  std::string name;
  BigRat s0;
  BigRat t0;
};

// integers, fibonacci, jacobsthal, pell, mersenne, chebyshev(a), pq(p,q),
// lucas(P,Q).
Specialization specialization(const std::string& name, const std::vector<BigRat>& params = {});
ContextPtr specialization_context(const std::string& name, const std::vector<BigRat>& params = {});
std::vector<std::string> specialization_names();

}  // namespace stcalc
