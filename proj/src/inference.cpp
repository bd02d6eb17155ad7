#include "proxcatch/inference.hpp"

#include <algorithm>
#include <cmath>

#include "proxcatch/normal.hpp"

namespace proxcatch {

double NullConstants::sigma() const { return std::sqrt(sigma_sq); }

std::string to_string(Decision d) {
    switch (d) {
        case Decision::RejectForSegregation: return "RejectForSegregation";
        case Decision::RejectForAssociation: return "RejectForAssociation";
        case Decision::FailToReject: return "FailToReject";
    }
    return "?";
}

std::string to_string(TestSide s) {
    return s == TestSide::Segregation ? "segregation" : "association";
}

double test_statistic(double g_bar, int j_effective, const NullConstants& c) {
    if (j_effective < 1) throw DomainError("test_statistic: J must be >= 1");
    return std::sqrt(static_cast<double>(j_effective)) * (g_bar - c.mu) / c.sigma();
}

PValues p_values(double s) {
    if (!std::isfinite(s)) throw DomainError("p_values: statistic must be finite");
    const double seg = norm_cdf(s);
    return {seg, 1.0 - seg};
}

double critical_value(double alpha, TestSide side) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("critical_value: alpha must be in (0, 1)");
    return side == TestSide::Segregation ? norm_quantile(alpha) : norm_quantile(1.0 - alpha);
}

int min_J_for_consistency(double alpha, double g_bar_limit, TestSide side, const NullConstants& c) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("min_J_for_consistency: alpha must be in (0, 1)");
    if (g_bar_limit == c.mu)
        throw DomainError("min_J_for_consistency: limiting mean equals the null mean");
    const double z = critical_value(alpha, side);
    const double ratio = c.sigma() * z / (c.mu - g_bar_limit);
    return static_cast<int>(std::ceil(ratio * ratio));
}

TestOutcome run_test(const std::vector<Point>& x_points, const std::vector<Point>& y_points,
                     double alpha, RFactor r, const NullConstants& c) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("run_test: alpha must be in (0, 1)");
    const DelaunayMesh mesh = delaunay(y_points);
    const MeanDominationResult md = mean_domination(mesh, x_points, r);

    TestOutcome out;
    out.g_bar = md.g_bar;
    out.j_effective = md.j_effective;
    out.j_total = mesh.triangle_count();
    out.n_discarded = md.outside_count;
    out.n_used = static_cast<int>(x_points.size()) - md.outside_count;
    out.alpha = alpha;
    out.s = test_statistic(md.g_bar, md.j_effective, c);
    const PValues p = p_values(out.s);
    out.p_segregation = p.segregation;
    out.p_association = p.association;
    if (out.s < critical_value(alpha, TestSide::Segregation))
        out.decision = Decision::RejectForSegregation;
    else if (out.s > critical_value(alpha, TestSide::Association))
        out.decision = Decision::RejectForAssociation;
    else
        out.decision = Decision::FailToReject;
    if (!(r == RFactor(1.5)))
        out.warning = "normal calibration constants (mu, sigma^2) apply only at r = 3/2";
    return out;
}

namespace {

// Largest G_bar cut (segregation) or smallest (association) whose attained
// null level stays at or below alpha; G_bar ties make the attained level a
// step function, so the cut is searched over the observed values.
struct EmpiricalCut {
    double cut;
    double attained;
};

EmpiricalCut empirical_cut(std::vector<double> null_g, double alpha, TestSide side) {
    std::sort(null_g.begin(), null_g.end());
    const double R = static_cast<double>(null_g.size());
    EmpiricalCut best{null_g.front(), 0.0};  // rejecting nothing is always admissible
    if (side == TestSide::Segregation) {
        best.cut = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < null_g.size(); ++i) {
            if (i > 0 && null_g[i] == null_g[i - 1]) continue;
            const double level = static_cast<double>(i) / R;  // mass strictly below null_g[i]
            if (level <= alpha) best = {null_g[i], level};
        }
    } else {
        best.cut = std::numeric_limits<double>::infinity();
        for (size_t i = null_g.size(); i-- > 0;) {
            if (i + 1 < null_g.size() && null_g[i] == null_g[i + 1]) continue;
            const double level = static_cast<double>(null_g.size() - 1 - i) / R;  // mass strictly above
            if (level <= alpha) best = {null_g[i], level};
        }
    }
    return best;
}

}  // namespace

PowerResult power_study(const DelaunayMesh& mesh, int n, const AlternativeSpec& alt, int replicates,
                        double alpha, std::uint64_t seed, CriticalMode mode,
                        std::optional<TestSide> side_opt, int threads, const NullConstants& c) {
    TestSide side;
    if (side_opt) {
        side = *side_opt;
    } else {
        switch (alt.kind()) {
            case AlternativeSpec::Kind::Segregation: side = TestSide::Segregation; break;
            case AlternativeSpec::Kind::Association: side = TestSide::Association; break;
            default:
                throw DomainError("power_study: a side must be given for the null model");
        }
    }

    ReplicationPlan plan;
    plan.n = n;
    plan.replicates = replicates;
    plan.seed = seed;
    plan.r = RFactor(1.5);
    plan.target = MeshTarget{mesh};
    plan.alternative = alt;
    plan.threads = threads;

    PowerResult out;
    out.side = side;
    out.mode = mode;
    out.g_values = replicate_mean_gamma(plan);

    long rejected = 0;
    if (mode == CriticalMode::Asymptotic) {
        out.critical = critical_value(alpha, side);
        for (double g : out.g_values) {
            const double s = test_statistic(g, mesh.triangle_count(), c);
            rejected += side == TestSide::Segregation ? (s < out.critical) : (s > out.critical);
        }
    } else {
        ReplicationPlan null_plan = plan;
        null_plan.alternative = AlternativeSpec::null();
        null_plan.seed = seed ^ 0xD1B54A32D192ED03ULL;  // independent calibration stream
        const EmpiricalCut cut = empirical_cut(replicate_mean_gamma(null_plan), alpha, side);
        out.critical = cut.cut;
        out.attained_level = cut.attained;
        for (double g : out.g_values)
            rejected += side == TestSide::Segregation ? (g < cut.cut) : (g > cut.cut);
    }
    out.rate = static_cast<double>(rejected) / replicates;
    return out;
}

}  // namespace proxcatch
