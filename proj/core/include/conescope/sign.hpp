#pragma once

#include <cstdint>
#include <string_view>

namespace conescope {

// Which part of G = P ⊔ P^-1 ⊔ {1} an element lies in.
enum class Sign : std::int8_t { Negative = -1, Identity = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<std::int8_t>(s)); }

// "pos", "neg", "id" (the DOT attribute values).
constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Positive:
      return "pos";
    case Sign::Negative:
      return "neg";
    case Sign::Identity:
      return "id";
  }
  return "id";
}

}  // namespace conescope
