#include "proxcatch/proximity.hpp"

#include <algorithm>
#include <cmath>

namespace proxcatch {

namespace {

void require_inside(const Point& p, const Triangle& t, const char* who) {
    if (!t.contains(p)) throw DomainError(std::string(who) + ": point outside triangle");
}

// Closed catch test expressed on vertex-line distances: dz <= r * dx, with
// the degenerate-anchor (dx == 0) and r == inf branches made exact.
bool line_distance_catch(double dx, double dz, RFactor r) {
    if (dx == 0.0) return dz == 0.0;
    if (r.is_infinite()) return true;
    return dz <= r.value() * dx;
}

// Membership of a line distance dz in the Gamma1 half-plane with set
// extremum m: r * dz >= m, same branch care as above.
bool line_distance_member(double dz, double m, RFactor r) {
    if (dz == 0.0) return m == 0.0;
    if (r.is_infinite()) return true;
    return r.value() * dz >= m;
}

// Clip a convex polygon by the half-plane { p : n.dot(p) >= c }.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Point& n, double c) {
    std::vector<Point> out;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        const double da = n.dot(a) - c;
        const double db = n.dot(b) - c;
        if (da >= 0.0) out.push_back(a);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) out.push_back(a + (da / (da - db)) * (b - a));
    }
    return out;
}

double polygon_area(const std::vector<Point>& poly) {
    double s = 0.0;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        s += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * std::abs(s);
}

}  // namespace

ProximityRegion proximity_region(const Point& x, const Triangle& t, RFactor r) {
    require_inside(x, t, "proximity_region");
    const VertexRegionId j = vertex_region(x, t);
    const double d = t.line_distance(j, x);
    if (d == 0.0) return {x, ProximityRegion::Kind::DegeneratePoint};
    if (r.is_infinite()) return {x, ProximityRegion::Kind::WholeTriangle};
    return {x, ProximityRegion::Kind::ClippedTriangle, j,
            std::min(r.value() * d, t.vertex_height(j))};
}

bool catches(const Point& x, const Point& z, const Triangle& t, RFactor r) {
    require_inside(x, t, "catches");
    require_inside(z, t, "catches");
    const VertexRegionId j = vertex_region(x, t);
    return line_distance_catch(t.line_distance(j, x), t.line_distance(j, z), r);
}

bool Gamma1Region::contains(const Point& z) const {
    const VertexRegionId j = vertex_region(z, triangle_);
    return line_distance_member(triangle_.line_distance(j, z), extremum_[j], r_);
}

Gamma1Region gamma1_region(const std::vector<Point>& points, const Triangle& t, RFactor r) {
    if (points.empty()) throw DomainError("gamma1_region: empty point set");
    std::array<double, 3> extremum{0.0, 0.0, 0.0};
    for (const Point& p : points) {
        require_inside(p, t, "gamma1_region");
        for (int j = 0; j < 3; ++j) extremum[j] = std::max(extremum[j], t.line_distance(j, p));
    }
    return Gamma1Region(t, r, extremum);
}

double gamma1_area(const Gamma1Region& region) {
    const Triangle& t = region.triangle();
    double total = 0.0;
    for (int j = 0; j < 3; ++j) {
        const std::vector<Point> quad = {t.vertex(j), t.edge_midpoint((j + 2) % 3), t.centroid(),
                                         t.edge_midpoint((j + 1) % 3)};
        const Point& n = t.inward_normal(j);
        const double cut = n.dot(t.vertex(j)) + region.threshold(j);
        total += polygon_area(clip_halfplane(quad, n, cut));
    }
    return total;
}

double superset_area(RFactor r) {
    const double s3 = std::sqrt(3.0);
    if (r.is_infinite()) return s3 / 4.0;
    const double v = r.value();
    if (v <= 1.5) return 0.0;
    if (v <= 2.0) {
        const double u = 1.0 - 3.0 / (2.0 * v);
        return u * u * s3;
    }
    return s3 / 4.0 * (1.0 - 3.0 / (v * v));
}

bool in_superset_region(const Point& z, const Triangle& t, RFactor r) {
    require_inside(z, t, "in_superset_region");
    const VertexRegionId j = vertex_region(z, t);
    const double d = t.line_distance(j, z);
    if (r.is_infinite()) return d > 0.0;
    return r.value() * d >= t.vertex_height(j);
}

RFactor critical_r(const AlternativeSpec& alt) {
    const double s3 = std::sqrt(3.0);
    switch (alt.kind()) {
        case AlternativeSpec::Kind::Null:
            return RFactor(1.5);
        case AlternativeSpec::Kind::Segregation:
            // The boundary eps = sqrt(3)/4 is grouped with the small-eps branch.
            if (alt.epsilon() <= s3 / 4.0) return RFactor((3.0 - s3 * alt.epsilon()) / 2.0);
            return RFactor(s3 / alt.epsilon() - 2.0);
        case AlternativeSpec::Kind::Association:
            if (alt.epsilon() >= s3 / 4.0)
                throw DomainError("critical_r: association requires epsilon < sqrt(3)/4");
            return RFactor(3.0 / (2.0 * (1.0 - s3 * alt.epsilon())));
    }
    throw DomainError("critical_r: unknown alternative");
}

}  // namespace proxcatch
