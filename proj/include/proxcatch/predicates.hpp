#pragma once

#include "proxcatch/geometry.hpp"

namespace proxcatch {

/* Sign predicates with a floating-point filter: the double evaluation is
   trusted only when its magnitude exceeds a forward error bound, otherwise
   the determinant is re-evaluated in extended precision. A result within
   the extended-precision bound is reported as exactly zero (degenerate). */

// +1 if (a,b,c) is counter-clockwise, -1 if clockwise, 0 if collinear.
int orient2d(const Point& a, const Point& b, const Point& c);

// +1 if d lies strictly inside the circumcircle of the CCW triangle (a,b,c),
// -1 if strictly outside, 0 if cocircular.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace proxcatch
