#include "proxcatch/predicates.hpp"

#include <cfloat>
#include <cmath>

namespace proxcatch {

namespace {

// Error coefficients follow the static-filter pattern of Shewchuk's adaptive
// predicates: |error| <= coeff * (sum of |term| magnitudes).
constexpr double kOrientCoeffD = (3.0 + 16.0 * DBL_EPSILON) * DBL_EPSILON;
constexpr double kInCircleCoeffD = (10.0 + 96.0 * DBL_EPSILON) * DBL_EPSILON;
constexpr long double kOrientCoeffL = (3.0L + 16.0L * LDBL_EPSILON) * LDBL_EPSILON;
constexpr long double kInCircleCoeffL = (10.0L + 96.0L * LDBL_EPSILON) * LDBL_EPSILON;

template <typename T>
int orient2d_eval(const Point& a, const Point& b, const Point& c, T coeff, bool* certain) {
    const T acx = T(a.x()) - T(c.x());
    const T bcx = T(b.x()) - T(c.x());
    const T acy = T(a.y()) - T(c.y());
    const T bcy = T(b.y()) - T(c.y());
    const T l = acx * bcy;
    const T r = acy * bcx;
    const T det = l - r;
    const T bound = coeff * (std::abs(l) + std::abs(r));
    *certain = det > bound || -det > bound;
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

template <typename T>
int incircle_eval(const Point& a, const Point& b, const Point& c, const Point& d, T coeff,
                  bool* certain) {
    const T adx = T(a.x()) - T(d.x());
    const T ady = T(a.y()) - T(d.y());
    const T bdx = T(b.x()) - T(d.x());
    const T bdy = T(b.y()) - T(d.y());
    const T cdx = T(c.x()) - T(d.x());
    const T cdy = T(c.y()) - T(d.y());

    const T bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const T cdxady = cdx * ady, adxcdy = adx * cdy;
    const T adxbdy = adx * bdy, bdxady = bdx * ady;
    const T alift = adx * adx + ady * ady;
    const T blift = bdx * bdx + bdy * bdy;
    const T clift = cdx * cdx + cdy * cdy;

    const T det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const T permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                        (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                        (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const T bound = coeff * permanent;
    *certain = det > bound || -det > bound;
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    bool certain = false;
    int sign = orient2d_eval<double>(a, b, c, kOrientCoeffD, &certain);
    if (certain) return sign;
    sign = orient2d_eval<long double>(a, b, c, kOrientCoeffL, &certain);
    return certain ? sign : 0;
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    bool certain = false;
    int sign = incircle_eval<double>(a, b, c, d, kInCircleCoeffD, &certain);
    if (certain) return sign;
    sign = incircle_eval<long double>(a, b, c, d, kInCircleCoeffL, &certain);
    return certain ? sign : 0;
}

}  // namespace proxcatch
