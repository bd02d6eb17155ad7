#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "proxcatch/geometry.hpp"

using namespace proxcatch;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST_CASE("triangle construction and invariants") {
    const Triangle t(Point(0, 0), Point(2, 0), Point(0, 2));
    CHECK(t.area() == doctest::Approx(2.0));
    CHECK((t.centroid() - Point(2.0 / 3.0, 2.0 / 3.0)).norm() < 1e-15);

    // Clockwise input is normalized by swapping vertices 1 and 2.
    const Triangle cw(Point(0, 0), Point(0, 2), Point(2, 0));
    CHECK(cw.vertex(0) == Point(0, 0));
    CHECK(cw.vertex(1) == Point(2, 0));
    CHECK(signed_area(cw.vertex(0), cw.vertex(1), cw.vertex(2)) > 0);

    CHECK_THROWS_AS(Triangle(Point(0, 0), Point(1, 1), Point(2, 2)), GeometryError);
    CHECK_THROWS_AS(Triangle(Point(0, 0), Point(1, 0), Point(2, std::nan(""))), GeometryError);
}

TEST_CASE("line distances and heights") {
    const Triangle te = standard_triangle();
    for (int j = 0; j < 3; ++j) {
        CHECK(te.vertex_height(j) == doctest::Approx(kS3 / 2.0));
        CHECK(te.line_distance(j, te.vertex(j)) == doctest::Approx(0.0));
        CHECK(te.line_distance(j, te.edge_midpoint(j)) == doctest::Approx(kS3 / 2.0));
    }
    CHECK(te.line_distance(0, Point(0.3, 0.1)) == doctest::Approx((kS3 * 0.3 + 0.1) / 2.0));
}

TEST_CASE("standardize: already standard triangle gives the identity") {
    const AffineTransform tf = standardize(standard_triangle());
    CHECK((tf.linear - Eigen::Matrix2d::Identity()).norm() < 1e-14);
    CHECK(tf.translation.norm() < 1e-14);
    const Point p(0.2, 0.3);
    CHECK((tf(p) - p).norm() < 1e-14);
}

TEST_CASE("standardize: basic triangle matches the shear-scale map") {
    const double c1 = 0.3, c2 = 0.4;
    const Triangle tb(Point(0, 0), Point(1, 0), Point(c1, c2));
    const AffineTransform tf = standardize(tb);
    CHECK((tf(Point(0, 0)) - Point(0, 0)).norm() < 1e-14);
    CHECK((tf(Point(1, 0)) - Point(1, 0)).norm() < 1e-14);
    CHECK((tf(Point(c1, c2)) - Point(0.5, kS3 / 2.0)).norm() < 1e-14);
    // Composition of the vertical rescale with the shear on the new ordinate.
    Eigen::Matrix2d expect;
    expect << 1.0, (1.0 - 2.0 * c1) / (2.0 * c2), 0.0, kS3 / (2.0 * c2);
    CHECK((tf.linear - expect).norm() < 1e-12);
}

TEST_CASE("standardize: random triangles land on the standard vertices") {
    Rng rng(11);
    const Triangle te = standard_triangle();
    for (int round = 0; round < 200; ++round) {
        const Triangle t = oracles::random_triangle(rng);
        const AffineTransform tf = standardize(t);
        CHECK(tf.determinant() > 0.0);
        for (int j = 0; j < 3; ++j) {
            CHECK((tf(t.vertex(j)) - te.vertex(j)).norm() < 1e-12 * 10.0);
        }
        // Round trip through the inverse.
        const Point p = t.centroid();
        CHECK((tf.inverse()(tf(p)) - p).norm() < 1e-10);
    }
}

TEST_CASE("apply: identity and the fixed vertices of the shear-scale map") {
    CHECK((apply(AffineTransform::identity(), Point(0.2, 0.3)) - Point(0.2, 0.3)).norm() == 0.0);
    const AffineTransform tf = standardize(Triangle(Point(0, 0), Point(1, 0), Point(0.3, 0.4)));
    CHECK((apply(tf, Point(0, 0)) - Point(0, 0)).norm() < 1e-15);
    CHECK((apply(tf, Point(1, 0)) - Point(1, 0)).norm() < 1e-15);
}

TEST_CASE("vertex_region on the standard triangle") {
    const Triangle te = standard_triangle();
    CHECK(vertex_region(Point(0.05, 0.02), te) == 0);
    CHECK(vertex_region(Point(0.9, 0.05), te) == 1);
    CHECK(vertex_region(Point(0.5, 0.8), te) == 2);
    // Exact three-way tie at the centroid resolves to the lowest index.
    CHECK(vertex_region(te.centroid(), te) == 0);
    CHECK_THROWS_AS(vertex_region(Point(2.0, 2.0), te), DomainError);
}

TEST_CASE("vertex_region boundary points sit on the claimed segments") {
    // A point on the segment from the centroid to an edge midpoint borders
    // two regions; nudging off the segment selects each side.
    const Triangle te = standard_triangle();
    const Point mid01 = 0.5 * (te.vertex(0) + te.vertex(1));
    const Point on_seg = 0.5 * (te.centroid() + mid01);
    const int tie = vertex_region(on_seg, te);
    CHECK(tie == 0);  // regions 0 and 1 tie; lowest wins
    CHECK(vertex_region(on_seg + Point(-1e-6, 0.0), te) == 0);
    CHECK(vertex_region(on_seg + Point(1e-6, 0.0), te) == 1);
}

TEST_CASE("standardization commutes with vertex regions") {
    Rng rng(12);
    const Triangle te = standard_triangle();
    for (int round = 0; round < 2000; ++round) {
        const Triangle t = oracles::random_triangle(rng);
        const AffineTransform tf = standardize(t);
        const Point p = oracles::uniform_point(t, rng);
        CHECK(vertex_region(p, t) == vertex_region(tf(p), te));
    }
}

TEST_CASE("standardization preserves uniformity (chi-square, 16 cells)") {
    Rng rng(13);
    const Triangle t = oracles::random_triangle(rng);
    const AffineTransform tf = standardize(t);
    const Triangle te = standard_triangle();
    std::vector<long> counts(16, 0);
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const Point q = tf(oracles::uniform_point(t, rng));
        ++counts[oracles::cell_index_16(te.barycentric(q))];
    }
    // 0.999 quantile of chi-square with 15 degrees of freedom.
    CHECK(oracles::chi_square_equal_cells(counts, n) < 37.697);
}
