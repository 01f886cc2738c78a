#pragma once

#include <string>

#include "asf/affine_weyl.hpp"

namespace asf {

// Static alcove picture in the coweight line (n = 2) or plane (n = 3):
// a patch of alcoves around the base one, the fundamental box shaded, the
// base alcove outlined. The second form also highlights the alcoves of
// the interval below w0 * x; x must lie in the fundamental box. Ranks
// other than 2 and 3 raise UsageError.
std::string alcove_svg(int n);
std::string alcove_svg(int n, const AffineWeylElement& x);

// Minimal well-formedness check for a complete <svg> document: tags
// balance, attributes are quoted, the root element is svg. On failure
// writes a reason into *error when given.
bool svg_well_formed(const std::string& doc, std::string* error = nullptr);

}  // namespace asf
