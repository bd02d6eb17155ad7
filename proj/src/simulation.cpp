#include "proxcatch/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace proxcatch {

int default_thread_count() {
    if (const char* env = std::getenv("PROXCATCH_THREADS")) {
        const int k = std::atoi(env);
        if (k >= 1) return k;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_replicates(int count, std::uint64_t seed, int threads,
                         const std::function<void(int, Rng&)>& work) {
    if (threads <= 0) threads = default_thread_count();
    threads = std::min(threads, std::max(count, 1));
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) {
            Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
            work(i, rng);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto runner = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
                work(i, rng);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

std::vector<Point> sample_uniform_triangle(int n, const Triangle& t, Rng& rng) {
    if (n < 0) throw DomainError("sample_uniform_triangle: negative n");
    std::vector<Point> out;
    out.reserve(n);
    const Point& a = t.vertex(0);
    const Point ab = t.vertex(1) - a;
    const Point ac = t.vertex(2) - a;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform01();
        double v = rng.uniform01();
        if (u + v > 1.0) {  // fold the square's far half onto the triangle
            u = 1.0 - u;
            v = 1.0 - v;
        }
        out.push_back(a + u * ab + v * ac);
    }
    return out;
}

namespace {

std::vector<double> cumulative_areas(const DelaunayMesh& mesh) {
    std::vector<double> cum(mesh.triangle_count());
    double acc = 0.0;
    for (int j = 0; j < mesh.triangle_count(); ++j) {
        acc += mesh.triangle_at(j).area();
        cum[j] = acc;
    }
    return cum;
}

int pick_triangle(const std::vector<double>& cum, Rng& rng) {
    const double u = rng.uniform01() * cum.back();
    return static_cast<int>(std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
}

// Support predicate of the alternatives on the standard triangle, written on
// barycentric coordinates: corner j of vertex-line height eps is
// { alpha_j >= 1 - 2 eps / sqrt(3) }.
bool in_support(const AlternativeSpec& alt, const Eigen::Vector3d& bc) {
    switch (alt.kind()) {
        case AlternativeSpec::Kind::Null:
            return true;
        case AlternativeSpec::Kind::Segregation: {
            const double cut = 1.0 - 2.0 * alt.epsilon() / std::sqrt(3.0);
            return bc[0] < cut && bc[1] < cut && bc[2] < cut;
        }
        case AlternativeSpec::Kind::Association: {
            const double cut = 1.0 / 3.0 + 2.0 * alt.epsilon() / std::sqrt(3.0);
            return bc[0] >= cut || bc[1] >= cut || bc[2] >= cut;
        }
    }
    return false;
}

constexpr int kMaxRejectionRounds = 100000;

Point sample_alternative_standard(const AlternativeSpec& alt, const Triangle& te, Rng& rng) {
    for (int round = 0; round < kMaxRejectionRounds; ++round) {
        double u = rng.uniform01();
        double v = rng.uniform01();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const Point p = te.vertex(0) + u * (te.vertex(1) - te.vertex(0)) + v * (te.vertex(2) - te.vertex(0));
        if (in_support(alt, te.barycentric(p))) return p;
    }
    throw DomainError("sample_alternative: rejection sampling failed (support too small)");
}

}  // namespace

std::vector<Point> sample_uniform_hull(int n, const DelaunayMesh& mesh, Rng& rng) {
    if (n < 0) throw DomainError("sample_uniform_hull: negative n");
    const std::vector<double> cum = cumulative_areas(mesh);
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Triangle t = mesh.triangle_at(pick_triangle(cum, rng));
        out.push_back(sample_uniform_triangle(1, t, rng)[0]);
    }
    return out;
}

std::vector<Point> sample_alternative(int n, const AlternativeSpec& alt, const Triangle& t,
                                      Rng& rng) {
    if (n < 0) throw DomainError("sample_alternative: negative n");
    if (alt.is_null()) return sample_uniform_triangle(n, t, rng);
    const Triangle te = standard_triangle();
    const AffineTransform back = standardize(t).inverse();
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(back(sample_alternative_standard(alt, te, rng)));
    return out;
}

std::vector<Point> sample_alternative_mesh(int n, const AlternativeSpec& alt,
                                           const DelaunayMesh& mesh, Rng& rng) {
    if (n < 0) throw DomainError("sample_alternative_mesh: negative n");
    if (alt.is_null()) return sample_uniform_hull(n, mesh, rng);
    const std::vector<double> cum = cumulative_areas(mesh);
    const Triangle te = standard_triangle();
    std::vector<AffineTransform> back(mesh.triangle_count());
    for (int j = 0; j < mesh.triangle_count(); ++j) back[j] = standardize(mesh.triangle_at(j)).inverse();
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int j = pick_triangle(cum, rng);
        out.push_back(back[j](sample_alternative_standard(alt, te, rng)));
    }
    return out;
}

std::vector<Point> sample_unit_square(int n, Rng& rng) {
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform01();
        const double y = rng.uniform01();
        out.emplace_back(x, y);
    }
    return out;
}

GammaHistogram replicate_gamma(const ReplicationPlan& plan) {
    const auto* single = std::get_if<SingleTriangleTarget>(&plan.target);
    if (!single) throw DomainError("replicate_gamma: plan must target a single triangle");
    if (plan.n < 1) throw DomainError("replicate_gamma: n must be >= 1");
    if (plan.replicates < 1) throw DomainError("replicate_gamma: replicates must be >= 1");

    std::vector<int> gamma(plan.replicates);
    parallel_replicates(plan.replicates, plan.seed, plan.threads, [&](int i, Rng& rng) {
        const std::vector<Point> pts = sample_alternative(plan.n, plan.alternative, single->triangle, rng);
        gamma[i] = domination_number(pts, single->triangle, plan.r).gamma;
    });

    GammaHistogram h;
    h.n = plan.n;
    h.replicates = plan.replicates;
    h.r = plan.r;
    h.seed = plan.seed;
    for (int gi : gamma) {
        if (gi < 1 || gi > 3) throw std::logic_error("replicate_gamma: gamma outside {1,2,3}");
        ++h.counts[gi - 1];
    }
    return h;
}

std::vector<double> replicate_mean_gamma(const ReplicationPlan& plan) {
    const auto* target = std::get_if<MeshTarget>(&plan.target);
    if (!target) throw DomainError("replicate_mean_gamma: plan must target a mesh");
    if (plan.n < 1) throw DomainError("replicate_mean_gamma: n must be >= 1");
    if (plan.replicates < 1) throw DomainError("replicate_mean_gamma: replicates must be >= 1");

    std::vector<double> g(plan.replicates);
    parallel_replicates(plan.replicates, plan.seed, plan.threads, [&](int i, Rng& rng) {
        const std::vector<Point> pts = sample_alternative_mesh(plan.n, plan.alternative, target->mesh, rng);
        g[i] = mean_domination(target->mesh, pts, plan.r).g_bar;
    });
    return g;
}

}  // namespace proxcatch
