#include "stcalc/bigrat.hpp"

#include <functional>

#include "stcalc/errors.hpp"

namespace stcalc {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string body = part;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    std::size_t start = (!body.empty() && body[0] == '-') ? 1 : 0;
    if (start == body.size()) throw DomainError("malformed rational: " + s);
    for (std::size_t i = start; i < body.size(); ++i) {
      if (body[i] < '0' || body[i] > '9') throw DomainError("malformed rational: " + s);
    }
    return BigInt(body, 10);
  };
  if (slash == std::string::npos) return BigRat(parse_int(s), BigInt(1));
  BigInt n = parse_int(s.substr(0, slash));
  BigInt d = parse_int(s.substr(slash + 1));
  if (d == 0) throw DivisionByZero("rational with zero denominator: " + s);
  return BigRat(n, d);
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return BigRat(r);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat BigRat::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(k));
  return BigRat(n, d);
}

std::size_t BigRat::hash() const {
  std::size_t h1 = mpz_get_ui(v_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(v_)) << 61);
  std::size_t h2 = mpz_get_ui(v_.get_den_mpz_t());
  return h1 * 0x9e3779b97f4a7c15ULL ^ h2;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool rational_sqrt(const BigRat& x, BigRat& root) {
  if (x.sign() < 0) return false;
  BigInt n = x.num(), d = x.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return false;
  }
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = BigRat(rn, rd);
  return true;
}

}  // namespace stcalc
