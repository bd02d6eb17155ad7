#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "proxcatch/simulation.hpp"

namespace oracles {

namespace {

std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Point& n, double c) {
    std::vector<Point> out;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        const double da = n.dot(a) - c;
        const double db = n.dot(b) - c;
        if (da >= 0.0) out.push_back(a);
        if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0))
            out.push_back(a + (da / (da - db)) * (b - a));
    }
    return out;
}

}  // namespace

std::vector<Point> proximity_polygon(const Point& x, const Triangle& t, proxcatch::RFactor r) {
    const int j = proxcatch::vertex_region(x, t);
    const double d = t.line_distance(j, x);
    if (d == 0.0) return {};  // degenerate: the region is the single point x
    if (r.is_infinite()) return {t.vertex(0), t.vertex(1), t.vertex(2)};
    // Scale the host triangle about vertex j, then clip it back to the host.
    const double s = r.value() * d / t.vertex_height(j);
    std::vector<Point> poly;
    for (int k = 0; k < 3; ++k) poly.push_back(t.vertex(j) + s * (t.vertex(k) - t.vertex(j)));
    for (int k = 0; k < 3; ++k) {
        const Point& a = t.vertex((k + 1) % 3);
        poly = clip_halfplane(poly, t.inward_normal(k), t.inward_normal(k).dot(a));
        if (poly.empty()) break;
    }
    return poly;
}

bool polygon_contains(const std::vector<Point>& poly, const Point& p, double tol) {
    const int k = static_cast<int>(poly.size());
    if (k < 3) return false;
    for (int i = 0; i < k; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % k];
        const Point edge = b - a;
        const double cross = edge.x() * (p.y() - a.y()) - edge.y() * (p.x() - a.x());
        if (cross < -tol * edge.norm()) return false;
    }
    return true;
}

double polygon_area(const std::vector<Point>& poly) {
    double s = 0.0;
    const int k = static_cast<int>(poly.size());
    for (int i = 0; i < k; ++i)
        s += poly[i].x() * poly[(i + 1) % k].y() - poly[(i + 1) % k].x() * poly[i].y();
    return 0.5 * std::abs(s);
}

McArea mc_area(const Triangle& t, int probes, Rng& rng,
               const std::function<bool(const Point&)>& inside) {
    long hits = 0;
    for (int i = 0; i < probes; ++i) {
        const Point p = proxcatch::sample_uniform_triangle(1, t, rng)[0];
        hits += inside(p);
    }
    const double phat = static_cast<double>(hits) / probes;
    return {phat * t.area(), std::sqrt(phat * (1.0 - phat) / probes) * t.area()};
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

double adaptive(const std::function<double(double)>& f, double a, double b, double whole,
                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, a, m);
    const double right = simpson(f, m, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, m, left, tol / 2.0, depth - 1) +
           adaptive(f, m, b, right, tol / 2.0, depth - 1);
}

}  // namespace

double norm_cdf_quadrature(double x) {
    const auto density = [](double u) {
        return std::exp(-0.5 * u * u) / std::sqrt(2.0 * M_PI);
    };
    if (x < -40.0) return 0.0;
    if (x > 40.0) return 1.0;
    // Integrate from 0 with symmetry: Phi(x) = 0.5 + integral_0^x density.
    const double a = 0.0, b = x;
    if (a == b) return 0.5;
    const double whole = simpson(density, std::min(a, b), std::max(a, b));
    const double integral =
        adaptive(density, std::min(a, b), std::max(a, b), whole, 1e-13, 48);
    return x > 0.0 ? 0.5 + integral : 0.5 - integral;
}

double norm_quantile_bisection(double p) {
    double lo = -40.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (norm_cdf_quadrature(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double chi_square_equal_cells(const std::vector<long>& counts, double total) {
    const double expected = total / counts.size();
    double stat = 0.0;
    for (long c : counts) stat += (c - expected) * (c - expected) / expected;
    return stat;
}

int cell_index_16(const Eigen::Vector3d& bc) {
    // 4x4 uniform refinement: 10 upward cells (i+j+k = 3) and 6 downward
    // cells (i+j+k = 2) indexed by the floors of the scaled coordinates.
    const int i = std::min(3, static_cast<int>(std::floor(4.0 * bc[0])));
    const int j = std::min(3, static_cast<int>(std::floor(4.0 * bc[1])));
    const int k = std::min(3, static_cast<int>(std::floor(4.0 * bc[2])));
    int id = 0;
    if (i + j + k == 3) {
        // enumerate (i, j) with i + j <= 3
        id = 4 * i - i * (i - 1) / 2 + j;  // rows of 4, 3, 2, 1
    } else {
        id = 10 + 3 * i - i * (i - 1) / 2 + j;  // rows of 3, 2, 1
    }
    return std::clamp(id, 0, 15);
}

Triangle random_triangle(Rng& rng, double range, double min_area) {
    for (;;) {
        const Point a(rng.uniform(-range, range), rng.uniform(-range, range));
        const Point b(rng.uniform(-range, range), rng.uniform(-range, range));
        const Point c(rng.uniform(-range, range), rng.uniform(-range, range));
        if (std::abs(proxcatch::signed_area(a, b, c)) > min_area) return Triangle(a, b, c);
    }
}

Point uniform_point(const Triangle& t, Rng& rng) {
    return proxcatch::sample_uniform_triangle(1, t, rng)[0];
}

}  // namespace oracles
