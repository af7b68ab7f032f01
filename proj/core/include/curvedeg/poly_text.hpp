#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvedeg/poly.hpp"

namespace curvedeg {

// Canonical spaced rendering: "T^3 - 5*T^2 + 6*T - 1".
std::string render_poly(const MonicIntPoly& p);

// Compact rendering without spaces: "T^2-3*T+1" (used inside factors).
std::string render_poly_compact(const MonicIntPoly& p);

// Canonical factored rendering: "(T-1)^2*(T^2-3*T+1)".
std::string render_factored(
    const std::vector<std::pair<MonicIntPoly, int>>& factors);

// Parses either canonical form (and any +,-,*,^,parentheses combination of
// integers and T).  Throws format_error on malformed or non-monic input.
MonicIntPoly parse_poly(const std::string& text);

}  // namespace curvedeg
