#pragma once

#include <string>
#include <string_view>

namespace creutz {

/// Parses an angle in radians. Accepts decimal radians ("1.25", "-0.5e-1")
/// and multiples of pi ("pi", "-pi", "pi/2", "-3pi/2", "0.5pi", "3*pi/4").
/// Throws InvalidParameter (field = `field`) on anything else.
double parse_angle(std::string_view text, const std::string& field = "angle");

}  // namespace creutz
