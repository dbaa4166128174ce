#include <map>

#include "stcalc/errors.hpp"
#include "stcalc/stcore.hpp"

namespace stcalc {

namespace {

void need(const std::string& name, const std::vector<BigRat>& params, std::size_t n) {
  if (params.size() != n) {
    throw DomainError("specialization '" + name + "' takes " + std::to_string(n) + " parameter(s)");
  }
}

}  // namespace

std::vector<std::string> specialization_names() {
  return {"integers", "fibonacci", "jacobsthal", "pell", "mersenne",
          "chebyshev", "pq",        "lucas",      "qnum"};
}

Specialization specialization(const std::string& name, const std::vector<BigRat>& params) {
  static const std::map<std::string, std::pair<long, long>> fixed = {
      {"integers", {2, -1}}, {"fibonacci", {1, 1}}, {"jacobsthal", {1, 2}},
      {"pell", {2, 1}},      {"mersenne", {3, -2}}};
  if (auto it = fixed.find(name); it != fixed.end()) {
    need(name, params, 0);
    return {name, it->second.first, it->second.second};
  }
  if (name == "chebyshev") {
    need(name, params, 1);
    return {name, BigRat(2) * params[0], -1};
  }
  if (name == "pq") {
    need(name, params, 2);
    return {name, params[0] + params[1], -(params[0] * params[1])};
  }
  if (name == "lucas") {
    need(name, params, 2);
    return {name, params[0], -params[1]};
  }
  if (name == "qnum") {
    need(name, params, 1);
    return {name, BigRat(1) + params[0], -params[0]};
  }
  throw DomainError("unknown specialization '" + name + "'");
}

ContextPtr specialization_context(const std::string& name, const std::vector<BigRat>& params) {
  if (name == "qnum" && params.empty()) return STContext::qnumber(RatFunc::var(Var::q));
  if (name == "qnum") return STContext::qnumber(RatFunc(params[0]));
  auto sp = specialization(name, params);
  return STContext::specialized(sp.s0, sp.t0);
}

}  // namespace stcalc
