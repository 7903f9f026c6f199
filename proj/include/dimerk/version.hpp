#pragma once

#include <string_view>

namespace dimerk {

// Bump whenever a change can alter any cached or reported value.
inline constexpr std::string_view kGeneratorVersion = "dimerk-1.0.0";

}  // namespace dimerk
