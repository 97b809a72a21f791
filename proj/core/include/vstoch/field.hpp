#pragma once

#include <string>
#include <string_view>

namespace vstoch {

/// The three coefficient fields supported by the library.
enum class Field { R, C, H };

/// Number of real coefficients per scalar: 1, 2 or 4.
constexpr int real_dim(Field f) {
  switch (f) {
    case Field::R: return 1;
    case Field::C: return 2;
    case Field::H: return 4;
  }
  return 0;
}

constexpr std::string_view field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

/// Parses "R", "C" or "H". Throws InvalidInputError otherwise.
Field parse_field(std::string_view name);

}  // namespace vstoch
