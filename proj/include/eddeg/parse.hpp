#pragma once

#include <string>
#include <vector>

#include "eddeg/polynomial.hpp"

namespace eddeg {

// Parses the polynomial grammar over Q: identifiers, integer and a/b
// literals, operators + - * ^ (with ^ binding tightest, then *, then +/-),
// and parentheses. Implicit multiplication is rejected. Every identifier
// must name a ring variable.
PolyQ parse_poly(const std::string& text, const RingPtr& ring);
PolyQ parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace eddeg
