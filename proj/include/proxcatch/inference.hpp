#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxcatch/domination.hpp"
#include "proxcatch/simulation.hpp"

namespace proxcatch {

/* Limit distribution of the domination number at r = 3/2 under complete
   spatial randomness: P(gamma = 2) and P(gamma = 3), their mean mu and
   variance sigma^2. Centralized so a Monte Carlo recomputation can be
   substituted in one place. */
struct NullConstants {
    double mu = 2.2587;
    double sigma_sq = 0.1918;
    double p2 = 0.7413;
    double p3 = 0.2587;

    double sigma() const;
};

enum class TestSide { Segregation, Association };

enum class Decision { RejectForSegregation, RejectForAssociation, FailToReject };

std::string to_string(Decision d);
std::string to_string(TestSide s);

// S = sqrt(J) (G_bar - mu) / sigma.
double test_statistic(double g_bar, int j_effective, const NullConstants& c = {});

// One-sided p-values (Phi(S), 1 - Phi(S)); they sum to 1 exactly.
struct PValues {
    double segregation;
    double association;
};
PValues p_values(double s);

/* Critical value of S at level alpha: reject for S below Phi^{-1}(alpha)
   against segregation, above Phi^{-1}(1 - alpha) against association. */
double critical_value(double alpha, TestSide side);

/* Smallest number of Delaunay cells at which the level-alpha test is
   consistent against an alternative whose limiting mean domination number
   is g_bar_limit (2 or 1 under segregation, 3 under association). */
int min_J_for_consistency(double alpha, double g_bar_limit, TestSide side,
                          const NullConstants& c = {});

struct TestOutcome {
    double g_bar = 0.0;
    int j_effective = 0;
    int j_total = 0;
    int n_used = 0;
    int n_discarded = 0;  // X points outside the hull of the Y points
    double s = 0.0;
    double p_segregation = 1.0;
    double p_association = 1.0;
    double alpha = 0.05;
    Decision decision = Decision::FailToReject;
    // Set when r != 3/2: the normal calibration constants only apply at 3/2.
    std::optional<std::string> warning;
};

/* The complete test: Delaunay-triangulate the Y points, drop X points
   outside their hull, average per-cell domination numbers, and compare S
   against the one-sided critical values. */
TestOutcome run_test(const std::vector<Point>& x_points, const std::vector<Point>& y_points,
                     double alpha, RFactor r = RFactor(1.5), const NullConstants& c = {});

enum class CriticalMode { Asymptotic, EmpiricalFromNull };

struct PowerResult {
    double rate = 0.0;              // rejection rate under the requested model
    TestSide side = TestSide::Segregation;
    CriticalMode mode = CriticalMode::Asymptotic;
    double critical = 0.0;          // S threshold (asymptotic) or G_bar threshold (empirical)
    std::optional<double> attained_level;  // empirical mode: null mass actually rejected
    std::vector<double> g_values;   // replicate G_bar values under the model
};

/* Monte Carlo rejection rate on a fixed mesh: the estimated level when alt
   is the null, the estimated power otherwise. EmpiricalFromNull calibrates
   the cut on a separate null run (derived seed) and picks the most powerful
   cut whose attained null level does not exceed alpha. The side defaults to
   the one matching the alternative and must be given for the null. */
PowerResult power_study(const DelaunayMesh& mesh, int n, const AlternativeSpec& alt, int replicates,
                        double alpha, std::uint64_t seed, CriticalMode mode,
                        std::optional<TestSide> side = std::nullopt, int threads = 0,
                        const NullConstants& c = {});

}  // namespace proxcatch
