#include "proxcatch/domination.hpp"

#include <algorithm>

namespace proxcatch {

namespace {

bool line_distance_catch(double dx, double dz, RFactor r) {
    if (dx == 0.0) return dz == 0.0;
    if (r.is_infinite()) return true;
    return dz <= r.value() * dx;
}

}  // namespace

CatchDigraph::CatchDigraph(std::vector<Point> points, const Triangle& t, RFactor r)
    : points_(std::move(points)), triangle_(t), r_(r) {
    const int n = size();
    region_.resize(n);
    for (int j = 0; j < 3; ++j) {
        dist_[j].resize(n);
        extremal_[j] = -1;
        set_extremum_[j] = 0.0;
    }
    for (int i = 0; i < n; ++i) {
        if (!triangle_.contains(points_[i]))
            throw DomainError("catch digraph: point outside triangle");
        region_[i] = vertex_region(points_[i], triangle_);
        for (int j = 0; j < 3; ++j) {
            dist_[j][i] = triangle_.line_distance(j, points_[i]);
            set_extremum_[j] = std::max(set_extremum_[j], dist_[j][i]);
        }
        const int j = region_[i];
        if (extremal_[j] < 0 || dist_[j][i] > dist_[j][extremal_[j]]) extremal_[j] = i;
    }
}

bool CatchDigraph::arc(int from, int to) const {
    const int j = region_[from];
    return line_distance_catch(dist_[j][from], dist_[j][to], r_);
}

std::vector<std::vector<bool>> CatchDigraph::adjacency() const {
    const int n = size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) adj[i][k] = arc(i, k);
    return adj;
}

CatchDigraph build_digraph(const std::vector<Point>& points, const Triangle& t, RFactor r) {
    return CatchDigraph(points, t, r);
}

DominationResult domination_number(const CatchDigraph& g) {
    const int n = g.size();
    if (n == 0) return {0, {}};

    // gamma = 1 iff some data point falls in the Gamma1 region; per vertex
    // region the best candidate is the extremal point.
    for (int j = 0; j < 3; ++j) {
        const int q = g.extremal_in_region(j);
        if (q < 0) continue;
        const double d = g.line_distance(j, q);
        bool member;
        if (d == 0.0)
            member = g.set_extremum(j) == 0.0;
        else if (g.r().is_infinite())
            member = true;
        else
            member = g.r().value() * d >= g.set_extremum(j);
        if (member) return {1, {q}};
    }

    std::vector<int> live;
    for (int j = 0; j < 3; ++j)
        if (g.extremal_in_region(j) >= 0) live.push_back(j);

    auto pair_covers = [&](int ja, int jb) {
        const int a = g.extremal_in_region(ja), b = g.extremal_in_region(jb);
        const double da = g.line_distance(ja, a), db = g.line_distance(jb, b);
        for (int i = 0; i < g.size(); ++i) {
            if (line_distance_catch(da, g.line_distance(ja, i), g.r())) continue;
            if (line_distance_catch(db, g.line_distance(jb, i), g.r())) continue;
            return false;
        }
        return true;
    };

    for (size_t a = 0; a < live.size(); ++a)
        for (size_t b = a + 1; b < live.size(); ++b)
            if (pair_covers(live[a], live[b]))
                return {2, {std::min(g.extremal_in_region(live[a]), g.extremal_in_region(live[b])),
                            std::max(g.extremal_in_region(live[a]), g.extremal_in_region(live[b]))}};

    std::vector<int> witnesses;
    for (int j : live) witnesses.push_back(g.extremal_in_region(j));
    return {3, witnesses};
}

DominationResult domination_number(const std::vector<Point>& points, const Triangle& t, RFactor r) {
    return domination_number(CatchDigraph(points, t, r));
}

DominationResult domination_number_bruteforce(const std::vector<Point>& points, const Triangle& t,
                                              RFactor r, int cap) {
    const int n = static_cast<int>(points.size());
    if (n > cap) throw DomainError("domination_number_bruteforce: point set exceeds oracle cap");
    if (n == 0) return {0, {}};
    const CatchDigraph g(points, t, r);

    auto covers = [&](int a, int i) { return g.arc(a, i); };

    for (int a = 0; a < n; ++a) {
        bool all = true;
        for (int i = 0; i < n && all; ++i) all = covers(a, i);
        if (all) return {1, {a}};
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool all = true;
            for (int i = 0; i < n && all; ++i) all = covers(a, i) || covers(b, i);
            if (all) return {2, {a, b}};
        }

    std::vector<int> witnesses;
    for (int j = 0; j < 3; ++j)
        if (g.extremal_in_region(j) >= 0) witnesses.push_back(g.extremal_in_region(j));
    return {3, witnesses};
}

MeanDominationResult mean_domination(const DelaunayMesh& mesh, const std::vector<Point>& points,
                                     RFactor r) {
    const int J = mesh.triangle_count();
    std::vector<std::vector<Point>> bucket(J);
    MeanDominationResult out;
    out.per_triangle.assign(J, 0);
    for (const Point& p : points) {
        const int j = locate(p, mesh);
        if (j == kOutside)
            ++out.outside_count;
        else
            bucket[j].push_back(p);
    }
    double sum = 0.0;
    for (int j = 0; j < J; ++j) {
        if (bucket[j].empty()) continue;
        const DominationResult res = domination_number(bucket[j], mesh.triangle_at(j), r);
        out.per_triangle[j] = res.gamma;
        sum += res.gamma;
        ++out.j_effective;
    }
    if (out.j_effective == 0)
        throw InferenceError("mean_domination: no mesh triangle contains a point");
    out.g_bar = sum / out.j_effective;
    return out;
}

}  // namespace proxcatch
