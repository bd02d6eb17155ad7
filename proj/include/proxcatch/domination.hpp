#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "proxcatch/delaunay.hpp"
#include "proxcatch/proximity.hpp"

namespace proxcatch {

/* Proximity catch digraph on one triangle's points: arc (i, j) present iff
   point j lies in point i's proximity region. Arcs are evaluated on demand
   from cached vertex-line distances; the adjacency matrix can be
   materialized for inspection. */
class CatchDigraph {
public:
    CatchDigraph(std::vector<Point> points, const Triangle& t, RFactor r);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const Triangle& triangle() const { return triangle_; }
    RFactor r() const { return r_; }

    bool arc(int from, int to) const;
    std::vector<std::vector<bool>> adjacency() const;

    VertexRegionId region_of(int i) const { return region_[i]; }
    double line_distance(int j, int i) const { return dist_[j][i]; }
    // Index of the point in vertex region j closest to the opposite edge
    // (lowest index on ties), or -1 when the region holds no point.
    int extremal_in_region(int j) const { return extremal_[j]; }
    // Largest vertex-line distance from vertex j over all points.
    double set_extremum(int j) const { return set_extremum_[j]; }

private:
    std::vector<Point> points_;
    Triangle triangle_;
    RFactor r_;
    std::vector<VertexRegionId> region_;
    std::array<std::vector<double>, 3> dist_;
    std::array<int, 3> extremal_;
    std::array<double, 3> set_extremum_;
};

CatchDigraph build_digraph(const std::vector<Point>& points, const Triangle& t, RFactor r);

struct DominationResult {
    int gamma = 0;                 // in {0, 1, 2, 3}
    std::vector<int> witnesses;    // point indices of a minimum dominating set
};

/* Exact domination number (gamma(empty) := 0). gamma = 1 iff a data point
   lies in the Gamma1 region; gamma <= 2 is decided on the at-most-three
   extremal points (regions of same-vertex points are nested in their line
   distance, so an arbitrary dominating pair can be replaced by extremal
   ones); otherwise the extremal points, one per nonempty vertex region,
   dominate and gamma = 3. */
DominationResult domination_number(const CatchDigraph& digraph);
DominationResult domination_number(const std::vector<Point>& points, const Triangle& t, RFactor r);

/* Exhaustive reference: tries every singleton, then every pair. Test oracle
   only; refuses point sets larger than `cap`. */
DominationResult domination_number_bruteforce(const std::vector<Point>& points, const Triangle& t,
                                              RFactor r, int cap = 200);

struct MeanDominationResult {
    double g_bar = 0.0;                 // mean gamma over triangles holding points
    int j_effective = 0;                // number of such triangles
    std::vector<int> per_triangle;      // gamma per mesh triangle (0 when empty)
    int outside_count = 0;              // points outside the hull, skipped
};

/* Partitions the points over the mesh by point location and averages the
   per-triangle domination numbers over the triangles that received points.
   Throws InferenceError when no triangle holds any point. */
MeanDominationResult mean_domination(const DelaunayMesh& mesh, const std::vector<Point>& points,
                                     RFactor r);

}  // namespace proxcatch
