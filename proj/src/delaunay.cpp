#include "proxcatch/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>

#include "proxcatch/predicates.hpp"

namespace proxcatch {

namespace {

struct Tri {
    int v[3];
    bool alive = true;
};

// Hull winds CCW, so the shoelace sum is positive.
double polygon_area(const std::vector<Point>& pts, const std::vector<int>& cycle) {
    double s = 0.0;
    const int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
        const Point& a = pts[cycle[i]];
        const Point& b = pts[cycle[(i + 1) % n]];
        s += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * s;
}

}  // namespace

double DelaunayMesh::hull_area() const { return polygon_area(sites, hull); }

DelaunayMesh delaunay(const std::vector<Point>& sites) {
    const int m = static_cast<int>(sites.size());
    if (m < 3) throw GeometryError("delaunay: need at least 3 sites");
    for (const Point& s : sites)
        if (!is_finite(s)) throw GeometryError("delaunay: non-finite site");

    {
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sites[a].x() != sites[b].x() ? sites[a].x() < sites[b].x()
                                                : sites[a].y() < sites[b].y();
        });
        for (int i = 1; i < m; ++i)
            if (sites[order[i]] == sites[order[i - 1]])
                throw GeometryError("delaunay: duplicate sites");
    }

    bool any_noncollinear = false;
    for (int i = 2; i < m && !any_noncollinear; ++i)
        any_noncollinear = orient2d(sites[0], sites[1], sites[i]) != 0;
    // sites[0], sites[1] may themselves sit on a common line with everything
    // else only if *all* triples through them are collinear; distinct sites
    // collinear with (0,1) force global collinearity, so the scan suffices.
    if (!any_noncollinear) throw GeometryError("delaunay: all sites collinear");

    // Work on sites normalized into the unit box so the enclosing triangle's
    // margin is scale-free.
    Point lo = sites[0], hi = sites[0];
    for (const Point& s : sites) {
        lo = lo.cwiseMin(s);
        hi = hi.cwiseMax(s);
    }
    const double span = std::max((hi - lo).maxCoeff(), 1e-300);
    std::vector<Point> pts(m + 3);
    for (int i = 0; i < m; ++i) pts[i] = (sites[i] - lo) / span;

    const double big = double(1 << 20);
    pts[m + 0] = Point(0.5, 0.5 + 2.0 * big);
    pts[m + 1] = Point(0.5 - 2.0 * big, 0.5 - big);
    pts[m + 2] = Point(0.5 + 2.0 * big, 0.5 - big);

    std::vector<Tri> tris;
    tris.push_back({{m, m + 1, m + 2}, true});

    std::vector<int> bad;
    std::map<std::pair<int, int>, int> edge_use;
    for (int s = 0; s < m; ++s) {
        bad.clear();
        edge_use.clear();
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (!tris[t].alive) continue;
            // Strictly-inside only: a cocircular site keeps the older triangles.
            if (incircle(pts[tris[t].v[0]], pts[tris[t].v[1]], pts[tris[t].v[2]], pts[s]) > 0)
                bad.push_back(t);
        }
        if (bad.empty()) throw GeometryError("delaunay: internal error (site in no circumcircle)");
        for (int t : bad) {
            for (int k = 0; k < 3; ++k) {
                const int a = tris[t].v[k], b = tris[t].v[(k + 1) % 3];
                auto rev = edge_use.find({b, a});
                if (rev != edge_use.end())
                    edge_use.erase(rev);
                else
                    edge_use[{a, b}] = t;
            }
            tris[t].alive = false;
        }
        for (const auto& [edge, from] : edge_use) {
            if (orient2d(pts[edge.first], pts[edge.second], pts[s]) <= 0)
                throw GeometryError("delaunay: internal error (degenerate cavity fan)");
            tris.push_back({{edge.first, edge.second, s}, true});
        }
    }

    DelaunayMesh mesh;
    mesh.sites = sites;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        if (t.v[0] >= m || t.v[1] >= m || t.v[2] >= m) continue;
        std::array<int, 3> v{t.v[0], t.v[1], t.v[2]};
        while (v[0] != std::min({v[0], v[1], v[2]})) v = {v[1], v[2], v[0]};
        mesh.triangles.push_back(v);
    }
    if (mesh.triangles.empty()) throw GeometryError("delaunay: no triangles produced");

    // Lawson pass on the original coordinates: flip any interior edge whose
    // quad strictly violates the empty-circumcircle test. Cocircular quads
    // keep the diagonal chosen during insertion.
    auto flip_pass = [&]() {
        std::map<std::pair<int, int>, std::pair<int, int>> opposite;  // undirected edge -> (tri, apex)
        for (int t = 0; t < static_cast<int>(mesh.triangles.size()); ++t) {
            const auto& v = mesh.triangles[t];
            for (int k = 0; k < 3; ++k) {
                int a = v[k], b = v[(k + 1) % 3], c = v[(k + 2) % 3];
                auto key = std::minmax(a, b);
                auto it = opposite.find({key.first, key.second});
                if (it == opposite.end()) {
                    opposite[{key.first, key.second}] = {t, c};
                } else {
                    const int t2 = it->second.first, d = it->second.second;
                    if (incircle(sites[a], sites[b], sites[c], sites[d]) > 0 &&
                        orient2d(sites[a], sites[d], sites[c]) > 0 &&
                        orient2d(sites[b], sites[c], sites[d]) > 0) {
                        mesh.triangles[t] = {a, d, c};
                        mesh.triangles[t2] = {b, c, d};
                        return true;
                    }
                }
            }
        }
        return false;
    };
    for (int guard = 0; guard < m * m + 16 && flip_pass(); ++guard) {
    }

    for (auto& v : mesh.triangles) {
        if (orient2d(sites[v[0]], sites[v[1]], sites[v[2]]) < 0) std::swap(v[1], v[2]);
        while (v[0] != std::min({v[0], v[1], v[2]})) v = {v[1], v[2], v[0]};
    }
    std::sort(mesh.triangles.begin(), mesh.triangles.end());

    // Boundary cycle: directed edges that appear without their reverse.
    std::map<int, int> next_on_hull;
    {
        std::map<std::pair<int, int>, int> count;
        for (const auto& v : mesh.triangles)
            for (int k = 0; k < 3; ++k) count[{v[k], v[(k + 1) % 3]}]++;
        for (const auto& [e, c] : count) {
            (void)c;
            if (!count.count({e.second, e.first})) next_on_hull[e.first] = e.second;
        }
    }
    if (next_on_hull.empty()) throw GeometryError("delaunay: internal error (no boundary)");
    const int start = next_on_hull.begin()->first;
    int cur = start;
    do {
        mesh.hull.push_back(cur);
        auto it = next_on_hull.find(cur);
        if (it == next_on_hull.end() || mesh.hull.size() > next_on_hull.size())
            throw GeometryError("delaunay: internal error (open boundary)");
        cur = it->second;
    } while (cur != start);

    return mesh;
}

int locate(const Point& p, const DelaunayMesh& mesh) {
    if (!is_finite(p)) throw DomainError("locate: non-finite point");
    for (int j = 0; j < mesh.triangle_count(); ++j) {
        const auto& v = mesh.triangles[j];
        if (orient2d(mesh.sites[v[0]], mesh.sites[v[1]], p) >= 0 &&
            orient2d(mesh.sites[v[1]], mesh.sites[v[2]], p) >= 0 &&
            orient2d(mesh.sites[v[2]], mesh.sites[v[0]], p) >= 0)
            return j;
    }
    return kOutside;
}

}  // namespace proxcatch
