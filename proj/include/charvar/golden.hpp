#pragma once

#include "charvar/laurent.hpp"

namespace charvar {

// Frozen low-genus reference rows used as regression anchors.
inline constexpr int golden_min_genus = 2;
inline constexpr int golden_max_genus = 5;

// Betti intersection E-polynomial for SL2, truncated at total degree 3g-3;
// the full polynomial is palindromic of degree 6g-6, so the upper half is
// determined by symmetry. Variable q.
LaurentPoly golden_ie_betti_low(int g);

// Full intersection Poincare polynomial for SL2. Variable t.
LaurentPoly golden_ip(int g);

// Difference between the intersection and the ordinary Poincare polynomial
// for SL2. Variable t.
LaurentPoly golden_ip_defect(int g);

} // namespace charvar
