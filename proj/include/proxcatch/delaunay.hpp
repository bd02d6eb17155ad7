#pragma once

#include <array>
#include <optional>
#include <vector>

#include "proxcatch/geometry.hpp"

namespace proxcatch {

/* Delaunay triangulation of a planar site set.

   Triangles are triples of site indices, counter-clockwise, each rotated so
   its smallest index comes first, and the triangle list is sorted
   lexicographically; the hull is the boundary cycle in counter-clockwise
   order starting from its smallest site index. The mesh is therefore a
   deterministic function of the input sequence. */
struct DelaunayMesh {
    std::vector<Point> sites;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> hull;

    int triangle_count() const { return static_cast<int>(triangles.size()); }
    Triangle triangle_at(int j) const {
        const auto& t = triangles[j];
        return Triangle(sites[t[0]], sites[t[1]], sites[t[2]]);
    }
    double hull_area() const;
};

/* Bowyer-Watson incremental triangulation over a remote enclosing triangle.
   Sites are inserted in input order; exact cocircular ties are resolved by
   keeping the triangles created earlier (equivalent to perturbing each site
   by its insertion rank), so the diagonal chosen inside a cocircular quad is
   a deterministic function of the input order.

   Throws GeometryError for fewer than 3 sites, duplicate sites, or an
   all-collinear configuration. */
DelaunayMesh delaunay(const std::vector<Point>& sites);

// locate() result for points not covered by any mesh triangle.
inline constexpr int kOutside = -1;

/* Index of the mesh triangle containing p (closed triangles; points on a
   shared edge report the lowest incident triangle index), or kOutside. */
int locate(const Point& p, const DelaunayMesh& mesh);

}  // namespace proxcatch
