#pragma once

#include <array>
#include <complex>
#include <string_view>

namespace checkerboard {

using Complex = std::complex<double>;

// Velocity direction of a checkerboard step: +c (right) or -c (left).
enum class Sign : signed char { Minus = -1, Plus = +1 };

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Propagator component K_{beta alpha}: arrival direction beta, departure
// direction alpha. Spelled "++", "+-", "-+", "--" with beta first.
enum class Component { PlusPlus, PlusMinus, MinusPlus, MinusMinus };

inline constexpr std::array<Component, 4> kAllComponents = {
    Component::PlusPlus, Component::PlusMinus, Component::MinusPlus,
    Component::MinusMinus};

constexpr Sign arrival_sign(Component c) {
  return (c == Component::PlusPlus || c == Component::PlusMinus) ? Sign::Plus
                                                                  : Sign::Minus;
}

constexpr Sign departure_sign(Component c) {
  return (c == Component::PlusPlus || c == Component::MinusPlus) ? Sign::Plus
                                                                  : Sign::Minus;
}

constexpr Component make_component(Sign beta, Sign alpha) {
  if (beta == Sign::Plus) {
    return alpha == Sign::Plus ? Component::PlusPlus : Component::PlusMinus;
  }
  return alpha == Sign::Plus ? Component::MinusPlus : Component::MinusMinus;
}

std::string_view to_string(Component c);

// Accepts "++", "+-", "-+", "--"; throws std::invalid_argument otherwise.
Component parse_component(std::string_view text);

// Selects the serial reference loop or the OpenMP kernel.
enum class Execution { Serial, Parallel };

}  // namespace checkerboard
