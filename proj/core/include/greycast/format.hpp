#pragma once

#include <string>

namespace greycast {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_shortest(double value);

/// Fixed two-decimal text, e.g. "9.03".
std::string format_fixed2(double value);

} // namespace greycast
