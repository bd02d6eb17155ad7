#include "proxcatch/geometry.hpp"

namespace proxcatch {

Triangle::Triangle(const Point& a, const Point& b, const Point& c, double degeneracy_tol) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c))
        throw GeometryError("triangle vertex has non-finite coordinates");
    vertices_ = {a, b, c};
    double sa = signed_area(a, b, c);
    if (sa < 0.0) {
        std::swap(vertices_[1], vertices_[2]);
        sa = -sa;
    }
    const double scale = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    if (!(sa > degeneracy_tol * scale * scale))
        throw GeometryError("degenerate (collinear) triangle");
    area_ = sa;

    for (int j = 0; j < 3; ++j) {
        const Point& e0 = vertices_[(j + 1) % 3];
        const Point& e1 = vertices_[(j + 2) % 3];
        const Point edge = e1 - e0;
        Point n(-edge.y(), edge.x());  // left normal of e0->e1; inward for CCW order
        n.normalize();
        normals_[j] = n;
        heights_[j] = (e0 - vertices_[j]).dot(n);
    }

    Eigen::Matrix2d basis;
    basis.col(0) = vertices_[1] - vertices_[0];
    basis.col(1) = vertices_[2] - vertices_[0];
    bary_inv_ = basis.inverse();
}

Eigen::Vector3d Triangle::barycentric(const Point& p) const {
    const Eigen::Vector2d uv = bary_inv_ * (p - vertices_[0]);
    return {1.0 - uv.x() - uv.y(), uv.x(), uv.y()};
}

bool Triangle::contains(const Point& p, double tol) const {
    const Eigen::Vector3d bc = barycentric(p);
    return bc.minCoeff() >= -tol;
}

Triangle standard_triangle() {
    return Triangle(Point(0.0, 0.0), Point(1.0, 0.0), Point(0.5, std::sqrt(3.0) / 2.0));
}

AffineTransform standardize(const Triangle& t) {
    const Triangle te = standard_triangle();
    Eigen::Matrix2d src, dst;
    src.col(0) = t.vertex(1) - t.vertex(0);
    src.col(1) = t.vertex(2) - t.vertex(0);
    dst.col(0) = te.vertex(1) - te.vertex(0);
    dst.col(1) = te.vertex(2) - te.vertex(0);
    AffineTransform tf;
    tf.linear = dst * src.inverse();
    tf.translation = te.vertex(0) - tf.linear * t.vertex(0);
    return tf;
}

VertexRegionId vertex_region(const Point& p, const Triangle& t) {
    if (!is_finite(p)) throw DomainError("vertex_region: non-finite point");
    const Eigen::Vector3d bc = t.barycentric(p);
    if (bc.minCoeff() < -1e-9) throw DomainError("vertex_region: point outside triangle");
    int best = 0;
    for (int j = 1; j < 3; ++j)
        if (bc[j] > bc[best]) best = j;
    // Median-line ties (within rounding) go to the lowest vertex index.
    constexpr double tie_tol = 1e-12;
    for (int j = 0; j < best; ++j)
        if (bc[best] - bc[j] <= tie_tol) return j;
    return best;
}

}  // namespace proxcatch
