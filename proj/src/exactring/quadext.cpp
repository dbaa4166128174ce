#include "stcalc/quadext.hpp"

#include "stcalc/errors.hpp"

namespace stcalc {

QuadExt::QuadExt(RatFunc a, RatFunc b, Disc disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {
  if (!b_.is_zero() && !disc_) throw DomainError("quadratic element without discriminant");
  if (disc_ && disc_->is_zero()) throw DomainError("degenerate discriminant");
}

void QuadExt::absorb(const Disc& other) {
  if (!other || disc_ == other) return;
  if (!disc_) {
    disc_ = other;
    return;
  }
  if (*disc_ != *other) throw RingMismatch("quadratic extensions with different discriminants");
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -b_;
  return r;
}

RatFunc QuadExt::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * *disc_;
}

QuadExt QuadExt::inverse() const {
  if (b_.is_zero()) {
    if (a_.is_zero()) throw DivisionByZero("inverse of zero");
    QuadExt r(a_.inverse());
    r.disc_ = disc_;
    return r;
  }
  RatFunc n = norm();
  if (n.is_zero()) throw NotAUnit("quadratic element with zero norm");
  RatFunc ninv = n.inverse();
  return QuadExt(a_ * ninv, -(b_ * ninv), disc_);
}

QuadExt QuadExt::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QuadExt result(1), base = *this;
  result.disc_ = disc_;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  absorb(o.disc_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  absorb(o.disc_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  absorb(o.disc_);
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  RatFunc a = a_ * o.a_ + b_ * o.b_ * *disc_;
  RatFunc b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt operator-(const QuadExt& a) {
  QuadExt r = a;
  r.a_ = -a.a_;
  r.b_ = -a.b_;
  return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.disc_ && y.disc_ && x.disc_ != y.disc_ && *x.disc_ != *y.disc_) {
    throw RingMismatch("comparing quadratic extensions with different discriminants");
  }
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string b = "(" + b_.to_string() + ")*delta";
  if (a_.is_zero()) return b;
  return "(" + a_.to_string() + ") + " + b;
}

}  // namespace stcalc
