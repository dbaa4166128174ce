#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stcalc/cli.hpp"

namespace stcalc::cli::detail {

using nlohmann::json;

// Parenthesized unless it is a single signed term.
std::string wrap(const std::string& s);

// c * m with c rendered as a coefficient; empty when c = 0.
std::string term(const RatFunc& c, const std::string& monomial);

// Joins rendered terms with " + " / " - ".
std::string join_terms(const std::vector<std::string>& terms);

std::string power(const std::string& var, long k);

std::string csv_field(const std::string& s);

}  // namespace stcalc::cli::detail
