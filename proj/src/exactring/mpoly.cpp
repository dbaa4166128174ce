#include "stcalc/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "stcalc/errors.hpp"

namespace stcalc {

Monomial Monomial::of(Var v, unsigned power) {
  Monomial m;
  m.exp_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

VarSet Monomial::support() const {
  VarSet s = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] != 0) s |= static_cast<VarSet>(1u << i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned e = static_cast<unsigned>(exp_[i]) + o.exp_[i];
    if (e > 0xffffu) throw DomainError("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  }
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r = *this;
  auto i = static_cast<std::size_t>(v);
  r.degree_ -= r.exp_[i];
  r.exp_[i] = 0;
  return r;
}

Monomial Monomial::restricted(VarSet vars) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if ((vars >> i) & 1u) {
      r.exp_[i] = exp_[i];
      r.degree_ += exp_[i];
    }
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (auto e : exp_) h = h * 131 + e;
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(static_cast<Var>(i));
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace_back(Monomial(), BigRat(c));
}

MPoly::MPoly(const BigRat& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

MPoly MPoly::var(Var v, unsigned power) { return monomial(Monomial::of(v, power), BigRat(1)); }

MPoly MPoly::monomial(const Monomial& m, const BigRat& c) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    BigRat c = std::move(terms_[i].second);
    while (j < terms_.size() && terms_[j].first == terms_[i].first) {
      c += terms_[j].second;
      ++j;
    }
    if (!c.is_zero()) {
      terms_[out].first = terms_[i].first;
      terms_[out].second = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second.is_one();
}

BigRat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return BigRat(0);
}

BigRat MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return constant_term();
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

unsigned MPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = 0xffffu;
  for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(v));
  return d;
}

VarSet MPoly::variables() const {
  VarSet s = 0;
  for (const auto& [m, c] : terms_) s |= m.support();
  return s;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().first;
  for (const auto& [m, c] : terms_) {
    g = Monomial::gcd(g, m);
    if (g.is_one()) break;
  }
  return g;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                               bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      BigRat c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.size() == 1) return b.times_monomial(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].first).scaled(b.terms_[0].second);
  const MPoly& big = a.size() >= b.size() ? a : b;
  const MPoly& small = a.size() >= b.size() ? b : a;
  // Accumulate one row per term of the smaller factor; rows stay sorted so
  // each step is a linear merge.
  MPoly acc;
  for (const auto& [m, c] : small.terms_) {
    MPoly row;
    row.terms_.reserve(big.terms_.size());
    for (const auto& [bm, bc] : big.terms_) row.terms_.emplace_back(bm * m, bc * c);
    acc += row;
  }
  return acc;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly MPoly::scaled(const BigRat& c) const {
  if (c.is_zero()) return MPoly();
  if (c.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MPoly MPoly::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

MPoly MPoly::div_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) {
    if (!m.divides(t.first)) throw DomainError("monomial does not divide polynomial");
    t.first = t.first / m;
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MPoly();
  if (d.is_constant()) return scaled(d.constant_value().inverse());
  const auto& [dm, dc] = d.terms_.front();
  if (d.is_monomial()) {
    MPoly r = *this;
    BigRat inv = dc.inverse();
    for (auto& t : r.terms_) {
      if (!dm.divides(t.first)) return std::nullopt;
      t.first = t.first / dm;
      t.second *= inv;
    }
    return r;
  }
  if (total_degree() < d.total_degree()) return std::nullopt;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    auto v = static_cast<Var>(i);
    if (degree(v) < d.degree(v)) return std::nullopt;
  }
  BigRat inv = dc.inverse();
  MPoly r = *this;
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.terms_.front();
    if (!dm.divides(rm)) return std::nullopt;
    Monomial qm = rm / dm;
    BigRat qc = rc * inv;
    r -= d.times_monomial(qm).scaled(qc);
    quot.emplace_back(qm, std::move(qc));
  }
  MPoly q;
  q.terms_ = std::move(quot);  // generated in decreasing order
  return q;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  const BigRat& lc = terms_.front().second;
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& [m, c] : terms_) buckets[m.exponent(v)].emplace_back(m.without(v), c);
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

std::vector<MPoly> MPoly::coefficients_wrt(VarSet vars) const {
  std::map<Monomial, std::vector<Term>> groups;
  VarSet rest = static_cast<VarSet>(~vars);
  for (const auto& [m, c] : terms_) groups[m.restricted(vars)].emplace_back(m.restricted(rest), c);
  std::vector<MPoly> out;
  out.reserve(groups.size());
  for (auto& [k, g] : groups) out.push_back(from_terms(std::move(g)));
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial vk = Monomial::of(v, static_cast<unsigned>(k));
    for (const auto& [m, c] : coeffs[k].terms_) terms.emplace_back(m * vk, c);
  }
  return from_terms(std::move(terms));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  if (degree(v) == 0) return *this;
  auto coeffs = coefficients_in(v);
  MPoly r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) r = r * value + coeffs[k];
  return r;
}

MPoly MPoly::evaluate(const std::map<Var, BigRat>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    BigRat coef = c;
    for (const auto& [v, val] : values) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      coef *= val.pow(e);
      rest = rest.without(v);
    }
    if (!coef.is_zero()) out.emplace_back(rest, std::move(coef));
  }
  return from_terms(std::move(out));
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m / Monomial::of(v), c * BigRat(static_cast<long>(e)));
  }
  return from_terms(std::move(out));
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) h = (h * 1000003) ^ (m.hash() * 31 + c.hash());
  return h;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag.to_string();
    } else {
      if (!mag.is_one()) os << mag.to_string() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

}  // namespace stcalc
