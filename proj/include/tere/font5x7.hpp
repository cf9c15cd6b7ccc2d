#pragma once

#include <cstdint>

namespace tere {

// Embedded 5x7 bitmap font for A-Z and 0-9; row bytes use bit 4 as the
// leftmost column. No system font dependence, so rendering is bit-exact
// across platforms.
const std::uint8_t* font5x7_glyph(char c);  // nullptr when unsupported
bool font5x7_has(char c);

inline constexpr int kFontRows = 7;
inline constexpr int kFontCols = 5;

}  // namespace tere
