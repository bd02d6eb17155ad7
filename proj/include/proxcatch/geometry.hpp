#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "proxcatch/errors.hpp"

namespace proxcatch {

using Point = Eigen::Vector2d;

inline bool is_finite(const Point& p) {
    return std::isfinite(p.x()) && std::isfinite(p.y());
}

// Signed area of the triangle (a, b, c); positive when counter-clockwise.
inline double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

// Invertible affine map p -> A*p + b.
struct AffineTransform {
    Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
    Point translation = Point::Zero();

    Point operator()(const Point& p) const { return linear * p + translation; }

    AffineTransform inverse() const {
        AffineTransform inv;
        inv.linear = linear.inverse();
        inv.translation = -(inv.linear * translation);
        return inv;
    }

    // this ∘ other: apply `other` first.
    AffineTransform compose(const AffineTransform& other) const {
        AffineTransform out;
        out.linear = linear * other.linear;
        out.translation = linear * other.translation + translation;
        return out;
    }

    double determinant() const { return linear.determinant(); }

    static AffineTransform identity() { return {}; }
};

inline Point apply(const AffineTransform& tf, const Point& p) { return tf(p); }

// Index of one of the three triangle vertices, 0-based.
using VertexRegionId = int;

/* An oriented triangle. Vertices are stored counter-clockwise; a clockwise
   input is normalized by swapping vertices 1 and 2 (vertex 0 is never moved),
   so the vertex <-> index correspondence is deterministic.

   Edge j is the edge opposite vertex j. The vertex regions R(v_j) partition
   the triangle with the segments joining the centroid to the three edge
   midpoints; in barycentric coordinates R(v_j) is exactly the cell where
   the j-th coordinate is maximal. */
class Triangle {
public:
    Triangle(const Point& a, const Point& b, const Point& c, double degeneracy_tol = 1e-14);

    const Point& vertex(int j) const { return vertices_[j]; }
    const std::array<Point, 3>& vertices() const { return vertices_; }

    Point centroid() const { return (vertices_[0] + vertices_[1] + vertices_[2]) / 3.0; }

    // Midpoint of edge j (the edge opposite vertex j).
    Point edge_midpoint(int j) const { return 0.5 * (vertices_[(j + 1) % 3] + vertices_[(j + 2) % 3]); }

    double area() const { return area_; }

    // Height of vertex j over the opposite edge.
    double vertex_height(int j) const { return heights_[j]; }

    // Unit normal of edge j pointing from the edge toward vertex j, negated:
    // inward_normal(j) points from vertex j toward edge j.
    const Point& inward_normal(int j) const { return normals_[j]; }

    // Barycentric coordinates of p (sum to 1; all in [0,1] iff p is inside).
    Eigen::Vector3d barycentric(const Point& p) const;

    // Distance from vertex j to the line through z parallel to edge j.
    // Zero exactly when z sits at vertex j; equals vertex_height(j) on edge j.
    double line_distance(int j, const Point& z) const { return (z - vertices_[j]).dot(normals_[j]); }

    // Containment with a small relative slack on the barycentric coordinates.
    bool contains(const Point& p, double tol = 1e-9) const;

private:
    std::array<Point, 3> vertices_;
    std::array<Point, 3> normals_;
    std::array<double, 3> heights_;
    Eigen::Matrix2d bary_inv_;  // inverse of [v1-v0, v2-v0]
    double area_;
};

// The standard equilateral triangle T((0,0), (1,0), (1/2, sqrt(3)/2)).
Triangle standard_triangle();

/* Affine map taking triangle vertex i onto standard-triangle vertex i.
   Pushes the uniform measure on t forward to the uniform measure on the
   standard triangle, and maps median lines and edge-parallel lines to their
   standard counterparts. */
AffineTransform standardize(const Triangle& t);

/* Vertex region containing p: the index j maximizing the j-th barycentric
   coordinate. Boundary ties resolve to the lowest vertex index. */
VertexRegionId vertex_region(const Point& p, const Triangle& t);

}  // namespace proxcatch
