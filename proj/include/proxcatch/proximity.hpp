#pragma once

#include <array>
#include <limits>
#include <vector>

#include "proxcatch/alternative.hpp"
#include "proxcatch/geometry.hpp"

namespace proxcatch {

// Expansion factor of the proximity map; any value in [1, inf], with inf
// kept as a genuine IEEE infinity so the whole-triangle branch is exact.
class RFactor {
public:
    explicit RFactor(double r) : r_(r) {
        if (!(r >= 1.0)) throw DomainError("RFactor: r must be >= 1");
    }
    static RFactor infinity() { return RFactor(std::numeric_limits<double>::infinity()); }

    double value() const { return r_; }
    bool is_infinite() const { return std::isinf(r_); }

    friend bool operator==(RFactor a, RFactor b) { return a.r_ == b.r_; }
    friend bool operator<(RFactor a, RFactor b) { return a.r_ < b.r_; }

private:
    double r_;
};

/* Proximity region of a point x in a triangle: the triangle similar to the
   host, anchored at x's vertex, with the far edge at r times x's vertex-line
   distance, clipped to the host. Degenerates to {x} when x is a host vertex
   and covers the host when r = inf. */
struct ProximityRegion {
    enum class Kind { DegeneratePoint, ClippedTriangle, WholeTriangle };

    Point owner;
    Kind kind;
    VertexRegionId vertex = 0;   // anchor vertex (ClippedTriangle only)
    double threshold = 0.0;      // min(r * d, vertex height)        "
};

ProximityRegion proximity_region(const Point& x, const Triangle& t, RFactor r);

/* Catch predicate: z in N^r(x), boundary included. Reduces to the scalar
   comparison d(v, line(v,z)) <= r * d(v, line(v,x)) with v = x's region
   vertex, except when x sits exactly on a host vertex (then only coincident
   points are caught). */
bool catches(const Point& x, const Point& z, const Triangle& t, RFactor r);

/* Locus of points z whose proximity region contains a whole point set;
   per vertex region it is a half-plane cut at the set's edge-extremum
   line distance divided by r. */
class Gamma1Region {
public:
    Gamma1Region(const Triangle& t, RFactor r, const std::array<double, 3>& extremum_line_distance)
        : triangle_(t), r_(r), extremum_(extremum_line_distance) {}

    const Triangle& triangle() const { return triangle_; }
    RFactor r() const { return r_; }

    // Largest vertex-line distance of the point set, per vertex.
    double extremum_line_distance(int j) const { return extremum_[j]; }

    // Cut distance from vertex j: membership needs d(v_j, line(v_j, z)) >= this.
    double threshold(int j) const { return r_.is_infinite() ? 0.0 : extremum_[j] / r_.value(); }

    bool contains(const Point& z) const;

private:
    Triangle triangle_;
    RFactor r_;
    std::array<double, 3> extremum_;
};

Gamma1Region gamma1_region(const std::vector<Point>& points, const Triangle& t, RFactor r);

// Exact polygon area of the region (piecewise over the three vertex regions).
double gamma1_area(const Gamma1Region& region);

/* Area of the superset region {z : N^r(z) = T} in the standard triangle:
   0 on [1, 3/2], (1 - 3/(2r))^2 * sqrt(3) on (3/2, 2],
   and sqrt(3)/4 * (1 - 3/r^2) on (2, inf]. */
double superset_area(RFactor r);

// Membership in the superset region of an arbitrary host triangle.
bool in_superset_region(const Point& z, const Triangle& t, RFactor r);

/* The expansion factor at which the domination number stays non-degenerate
   in the limit under the given model: 3/2 under the null, (3 - sqrt(3) eps)/2
   or sqrt(3)/eps - 2 under segregation (small/large eps), and
   3 / (2 (1 - sqrt(3) eps)) under association. */
RFactor critical_r(const AlternativeSpec& alt);

}  // namespace proxcatch
