#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "proxcatch/delaunay.hpp"
#include "proxcatch/simulation.hpp"

using namespace proxcatch;

namespace {

// Empty-circumcircle check at a relative tolerance on the circumradius.
void check_delaunay_property(const DelaunayMesh& mesh, double rel_tol = 1e-9) {
    for (const auto& tri : mesh.triangles) {
        const Point &a = mesh.sites[tri[0]], &b = mesh.sites[tri[1]], &c = mesh.sites[tri[2]];
        const double d = 2.0 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) +
                                c.x() * (a.y() - b.y()));
        const Point center(((a.squaredNorm()) * (b.y() - c.y()) + (b.squaredNorm()) * (c.y() - a.y()) +
                            (c.squaredNorm()) * (a.y() - b.y())) / d,
                           ((a.squaredNorm()) * (c.x() - b.x()) + (b.squaredNorm()) * (a.x() - c.x()) +
                            (c.squaredNorm()) * (b.x() - a.x())) / d);
        const double radius = (a - center).norm();
        for (int s = 0; s < static_cast<int>(mesh.sites.size()); ++s) {
            if (s == tri[0] || s == tri[1] || s == tri[2]) continue;
            CHECK((mesh.sites[s] - center).norm() >= radius * (1.0 - rel_tol));
        }
    }
}

}  // namespace

TEST_CASE("delaunay: three sites give one triangle") {
    const DelaunayMesh mesh = delaunay({Point(0, 0), Point(1, 0), Point(0.2, 0.9)});
    CHECK(mesh.triangle_count() == 1);
    CHECK(mesh.hull.size() == 3);
}

TEST_CASE("delaunay: input validation") {
    CHECK_THROWS_AS(delaunay({Point(0, 0), Point(1, 0)}), GeometryError);
    CHECK_THROWS_AS(delaunay({Point(0, 0), Point(1, 1), Point(2, 2), Point(3, 3)}), GeometryError);
    CHECK_THROWS_AS(delaunay({Point(0, 0), Point(1, 0), Point(1, 0), Point(0, 1)}), GeometryError);
}

TEST_CASE("delaunay: cocircular square resolves deterministically") {
    const std::vector<Point> square = {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
    const DelaunayMesh mesh = delaunay(square);
    REQUIRE(mesh.triangle_count() == 2);
    check_delaunay_property(mesh);  // both diagonals are Delaunay here
    // Deterministic repeat.
    const DelaunayMesh again = delaunay(square);
    CHECK(mesh.triangles == again.triangles);
    CHECK(mesh.hull == again.hull);
    // The two triangles share exactly one diagonal.
    std::set<int> all{mesh.triangles[0].begin(), mesh.triangles[0].end()};
    all.insert(mesh.triangles[1].begin(), mesh.triangles[1].end());
    CHECK(all.size() == 4);
}

TEST_CASE("delaunay: Euler relation and invariants on random sites") {
    Rng rng(21);
    for (int round = 0; round < 20; ++round) {
        const int m = 4 + static_cast<int>(rng.next_u64() % 20);
        const std::vector<Point> sites = sample_unit_square(m, rng);
        const DelaunayMesh mesh = delaunay(sites);
        check_delaunay_property(mesh);

        const int hull = static_cast<int>(mesh.hull.size());
        const int interior = m - hull;
        CHECK(mesh.triangle_count() == 2 * interior + hull - 2);

        double tri_area = 0.0;
        for (int j = 0; j < mesh.triangle_count(); ++j) tri_area += mesh.triangle_at(j).area();
        CHECK(tri_area == doctest::Approx(mesh.hull_area()).epsilon(1e-9));

        // Every site appears in some triangle.
        std::set<int> used;
        for (const auto& t : mesh.triangles) used.insert(t.begin(), t.end());
        CHECK(static_cast<int>(used.size()) == m);
    }
}

TEST_CASE("locate: centroid, outside point, shared edge") {
    const std::vector<Point> square = {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)};
    const DelaunayMesh mesh = delaunay(square);
    REQUIRE(mesh.triangle_count() == 2);

    CHECK(locate(mesh.triangle_at(0).centroid(), mesh) == 0);
    CHECK(locate(mesh.triangle_at(1).centroid(), mesh) == 1);
    CHECK(locate(Point(5, 5), mesh) == kOutside);
    CHECK(locate(Point(-0.001, 0.5), mesh) == kOutside);

    // The shared diagonal belongs to both triangles; its midpoint reports
    // the lower index.
    std::array<int, 3> t0 = mesh.triangles[0];
    std::array<int, 3> t1 = mesh.triangles[1];
    std::vector<int> shared;
    for (int v : t0)
        if (std::count(t1.begin(), t1.end(), v)) shared.push_back(v);
    REQUIRE(shared.size() == 2);
    const Point mid = 0.5 * (mesh.sites[shared[0]] + mesh.sites[shared[1]]);
    CHECK(locate(mid, mesh) == 0);
}

TEST_CASE("locate agrees with uniform-hull sampling support") {
    Rng rng(22);
    const std::vector<Point> sites = sample_unit_square(12, rng);
    const DelaunayMesh mesh = delaunay(sites);
    const std::vector<Point> pts = sample_uniform_hull(300, mesh, rng);
    for (const Point& p : pts) CHECK(locate(p, mesh) != kOutside);
}
