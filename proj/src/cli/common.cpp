#include "common.hpp"

namespace stcalc::cli::detail {

std::string wrap(const std::string& s) {
  bool compound = s.find('/') != std::string::npos;
  for (std::size_t i = 1; i < s.size() && !compound; ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') compound = true;
  }
  return compound ? "(" + s + ")" : s;
}

std::string power(const std::string& var, long k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

std::string term(const RatFunc& c, const std::string& monomial) {
  if (c.is_zero()) return "";
  if (monomial.empty()) return wrap(c.to_string());
  if (c.is_constant()) {
    BigRat v = c.constant_value();
    if (v == BigRat(1)) return monomial;
    if (v == BigRat(-1)) return "-" + monomial;
    return v.to_string() + "*" + monomial;
  }
  return wrap(c.to_string()) + "*" + monomial;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.empty()) continue;
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace stcalc::cli::detail
