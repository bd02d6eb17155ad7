#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths: the proximity region is realized as an explicit clipped
// polygon, areas are estimated by hit counting, and the normal CDF is
// integrated by adaptive Simpson quadrature.

#include <functional>
#include <vector>

#include "proxcatch/geometry.hpp"
#include "proxcatch/proximity.hpp"
#include "proxcatch/rng.hpp"

namespace oracles {

using proxcatch::Point;
using proxcatch::Rng;
using proxcatch::Triangle;

// Explicit polygon of N^r(x) in t (empty for the degenerate vertex case).
std::vector<Point> proximity_polygon(const Point& x, const Triangle& t, proxcatch::RFactor r);

// Closed point-in-convex-polygon test with a tolerance in absolute units.
bool polygon_contains(const std::vector<Point>& poly, const Point& p, double tol = 1e-12);

double polygon_area(const std::vector<Point>& poly);

// Membership fraction of `inside` over `probes` uniform draws in t, scaled
// by the triangle area; also reports the binomial standard error of the
// area estimate.
struct McArea {
    double area;
    double std_error;
};
McArea mc_area(const Triangle& t, int probes, Rng& rng,
               const std::function<bool(const Point&)>& inside);

// Normal CDF via adaptive Simpson integration of the density (abs err ~1e-12).
double norm_cdf_quadrature(double x);

// Quantile by bisection on the quadrature CDF.
double norm_quantile_bisection(double p);

// Chi-square statistic of observed counts against equal expected counts.
double chi_square_equal_cells(const std::vector<long>& counts, double total);

// 16 equal-area cells of a triangle indexed from barycentric coordinates.
int cell_index_16(const Eigen::Vector3d& bc);

// Random non-degenerate triangle with vertices in [-range, range]^2.
Triangle random_triangle(Rng& rng, double range = 10.0, double min_area = 1e-2);

// One uniform draw in t.
Point uniform_point(const Triangle& t, Rng& rng);

}  // namespace oracles
