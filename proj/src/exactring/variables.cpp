#include "stcalc/variables.hpp"

#include <array>

namespace stcalc {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {"s", "t", "q", "u", "v",
                                                           "w", "x", "y", "z", "b"};
}

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

}  // namespace stcalc
