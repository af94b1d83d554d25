#include "checkerboard/component.hpp"

#include <stdexcept>
#include <string>

namespace checkerboard {

std::string_view to_string(Component c) {
  switch (c) {
    case Component::PlusPlus: return "++";
    case Component::PlusMinus: return "+-";
    case Component::MinusPlus: return "-+";
    case Component::MinusMinus: return "--";
  }
  return "??";
}

Component parse_component(std::string_view text) {
  for (Component c : kAllComponents) {
    if (to_string(c) == text) return c;
  }
  throw std::invalid_argument("unknown propagator component '" + std::string(text) +
                              "' (expected ++, +-, -+ or --)");
}

}  // namespace checkerboard
