#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace stcalc {

// Generators available to polynomials. s, t are the Fibonacci parameters;
// the rest are formal variables used by series coefficients.
enum class Var : std::uint8_t { s, t, q, u, v, w, x, y, z, b };

inline constexpr std::size_t kNumVars = 10;

using VarSet = std::uint16_t;

constexpr VarSet var_bit(Var v) { return static_cast<VarSet>(1u << static_cast<unsigned>(v)); }

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

}  // namespace stcalc
