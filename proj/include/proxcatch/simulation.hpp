#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "proxcatch/alternative.hpp"
#include "proxcatch/delaunay.hpp"
#include "proxcatch/domination.hpp"
#include "proxcatch/rng.hpp"

namespace proxcatch {

int default_thread_count();

/* Runs `work(index, rng)` for index in [0, count) on `threads` workers.
   Each index gets its own derived random stream, so results are a function
   of (seed, index) alone and aggregation order is fixed by index. */
void parallel_replicates(int count, std::uint64_t seed, int threads,
                         const std::function<void(int, Rng&)>& work);

std::vector<Point> sample_uniform_triangle(int n, const Triangle& t, Rng& rng);

// Area-weighted triangle choice, then uniform within the chosen triangle.
std::vector<Point> sample_uniform_hull(int n, const DelaunayMesh& mesh, Rng& rng);

/* Null, segregation, or association sample on one triangle. The alternatives
   are defined on the standard triangle; points are drawn there by rejection
   and mapped back, so every returned point satisfies the support predicate
   of the model. */
std::vector<Point> sample_alternative(int n, const AlternativeSpec& alt, const Triangle& t,
                                      Rng& rng);

// The same, applied per Delaunay cell after an area-weighted cell choice.
std::vector<Point> sample_alternative_mesh(int n, const AlternativeSpec& alt,
                                           const DelaunayMesh& mesh, Rng& rng);

// n independent sites uniform on the unit square (mesh generation helper).
std::vector<Point> sample_unit_square(int n, Rng& rng);

struct SingleTriangleTarget {
    Triangle triangle;
};
struct MeshTarget {
    DelaunayMesh mesh;
};

struct ReplicationPlan {
    int n = 0;
    int replicates = 1;
    std::uint64_t seed = 0;
    RFactor r = RFactor(1.5);
    std::variant<SingleTriangleTarget, MeshTarget> target{SingleTriangleTarget{standard_triangle()}};
    AlternativeSpec alternative = AlternativeSpec::null();
    int threads = 0;  // 0: default_thread_count()
};

struct GammaHistogram {
    int n = 0;
    int replicates = 0;
    RFactor r = RFactor(1.5);
    std::uint64_t seed = 0;
    std::array<long, 3> counts{0, 0, 0};  // gamma = 1, 2, 3

    double probability(int gamma) const {
        return static_cast<double>(counts[gamma - 1]) / replicates;
    }
};

// Distribution of the domination number on a single triangle.
GammaHistogram replicate_gamma(const ReplicationPlan& plan);

// Mean domination number over the plan's mesh, one value per replicate.
std::vector<double> replicate_mean_gamma(const ReplicationPlan& plan);

}  // namespace proxcatch
