// proxcatch: r-factor proximity catch digraphs and the mean-domination test
// of complete spatial randomness, from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "proxcatch/inference.hpp"
#include "proxcatch/io.hpp"
#include "proxcatch/normal.hpp"

namespace {

using namespace proxcatch;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

RFactor parse_r(const std::string& text) {
    if (text == "inf" || text == "infinity") return RFactor::infinity();
    try {
        return RFactor(std::stod(text));
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse --r value '" + text + "'");
    }
}

std::string histogram_csv(const GammaHistogram& h) {
    std::ostringstream out;
    out << "n,r,replicates,seed,count_gamma1,count_gamma2,count_gamma3\n";
    out << h.n << ',' << (h.r.is_infinite() ? "inf" : format_double(h.r.value())) << ','
        << h.replicates << ',' << h.seed << ',' << h.counts[0] << ',' << h.counts[1] << ','
        << h.counts[2] << '\n';
    return out.str();
}

struct CommonOpts {
    std::string out = "-";
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "Output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--threads", opts.threads,
                    "Worker threads (default: PROXCATCH_THREADS or hardware)");
}

int run(int argc, char** argv) {
    CLI::App app{
        "Spatial segregation/association test based on the domination number\n"
        "of r-factor proximity catch digraphs over Delaunay triangulations."};
    app.require_subcommand(1);

    // ---- simulate ----------------------------------------------------------
    auto* simulate = app.add_subcommand(
        "simulate", "Estimate the distribution of the domination number under uniformity");
    int sim_n = 10;
    std::string sim_r = "1.5";
    int sim_replicates = 1000;
    std::uint64_t sim_seed = 0;
    CommonOpts sim_opts;
    simulate->add_option("--n", sim_n, "Points per replicate")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--r", sim_r, "Expansion factor in [1, inf]")->capture_default_str();
    simulate->add_option("--replicates", sim_replicates, "Monte Carlo replicates")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    add_common(simulate, sim_opts);

    // ---- test --------------------------------------------------------------
    auto* test = app.add_subcommand("test", "Test a two-class point data set against uniformity");
    std::string x_file, y_file;
    double test_alpha = 0.05;
    std::string test_r = "1.5";
    CommonOpts test_opts;
    test->add_option("--x-file", x_file, "CSV of the tested points (header x,y)")->required();
    test->add_option("--y-file", y_file, "CSV of the reference points (header x,y)")->required();
    test->add_option("--alpha", test_alpha, "Test level")->capture_default_str();
    test->add_option("--r", test_r, "Expansion factor (calibration holds at 1.5)")
        ->capture_default_str();
    add_common(test, test_opts);

    // ---- power -------------------------------------------------------------
    auto* power = app.add_subcommand("power", "Monte Carlo level/power on a fixed mesh");
    std::string pow_alt = "segregation";
    double pow_eps = -1.0, pow_delta = -1.0;
    std::string pow_y_file;
    int pow_sites = 10;
    std::uint64_t pow_sites_seed = 0;
    int pow_n = 1000, pow_replicates = 1000;
    double pow_alpha = 0.05;
    std::string pow_critical = "asymptotic";
    std::string pow_side = "";
    std::uint64_t pow_seed = 0;
    CommonOpts pow_opts;
    power->add_option("--alternative", pow_alt, "null | segregation | association")
        ->check(CLI::IsMember({"null", "segregation", "association"}))
        ->capture_default_str();
    power->add_option("--epsilon", pow_eps, "Corner height parameter (0 means the null)");
    power->add_option("--delta", pow_delta, "Carved area fraction (segregation only)");
    power->add_option("--y-file", pow_y_file, "CSV of mesh sites (header x,y)");
    power->add_option("--sites", pow_sites, "Random sites when no --y-file")->capture_default_str();
    power->add_option("--sites-seed", pow_sites_seed, "Seed for the random sites")
        ->capture_default_str();
    power->add_option("--n", pow_n, "Points per replicate")->capture_default_str();
    power->add_option("--replicates", pow_replicates, "Monte Carlo replicates")
        ->capture_default_str();
    power->add_option("--alpha", pow_alpha, "Test level")->capture_default_str();
    power->add_option("--critical", pow_critical, "asymptotic | empirical")
        ->check(CLI::IsMember({"asymptotic", "empirical"}))
        ->capture_default_str();
    power->add_option("--side", pow_side, "Rejection side for the null (segregation | association)")
        ->check(CLI::IsMember({"", "segregation", "association"}));
    power->add_option("--seed", pow_seed, "RNG seed")->capture_default_str();
    add_common(power, pow_opts);

    // ---- tables ------------------------------------------------------------
    auto* tables = app.add_subcommand(
        "tables", "Domination-number distribution grid plus a large-n limit estimate");
    int tab_replicates = 1000;
    std::uint64_t tab_seed = 0;
    int tab_large_n = 5000;
    CommonOpts tab_opts;
    tables->add_option("--replicates", tab_replicates, "Replicates per row")->capture_default_str();
    tables->add_option("--seed", tab_seed, "RNG seed")->capture_default_str();
    tables->add_option("--large-n", tab_large_n, "Sample size of the limit row")
        ->capture_default_str();
    add_common(tables, tab_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (simulate->parsed()) {
        ReplicationPlan plan;
        plan.n = sim_n;
        plan.replicates = sim_replicates;
        plan.seed = sim_seed;
        plan.r = parse_r(sim_r);
        plan.threads = sim_opts.threads;
        write_text_atomic(sim_opts.out, histogram_csv(replicate_gamma(plan)));
        return 0;
    }

    if (test->parsed()) {
        const std::vector<Point> xs = read_points_csv(x_file);
        const std::vector<Point> ys = read_points_csv(y_file);
        const TestOutcome res = run_test(xs, ys, test_alpha, parse_r(test_r));
        ordered_json doc;
        doc["g_bar"] = res.g_bar;
        doc["j_effective"] = res.j_effective;
        doc["j_total"] = res.j_total;
        doc["n_used"] = res.n_used;
        doc["n_discarded"] = res.n_discarded;
        doc["s"] = res.s;
        doc["p_segregation"] = res.p_segregation;
        doc["p_association"] = res.p_association;
        doc["alpha"] = res.alpha;
        doc["decision"] = to_string(res.decision);
        doc["constants"] = {{"mu", NullConstants{}.mu}, {"sigma_sq", NullConstants{}.sigma_sq}};
        if (res.warning) doc["warning"] = *res.warning;
        write_text_atomic(test_opts.out, doc.dump(2) + "\n");
        return 0;
    }

    if (power->parsed()) {
        if (pow_delta >= 0.0) {
            if (pow_alt != "segregation")
                throw DomainError("--delta applies to the segregation alternative only");
            if (pow_eps >= 0.0) throw DomainError("give either --epsilon or --delta, not both");
            pow_eps = delta_to_eps_segregation(pow_delta);
        }
        if (pow_alt == "null") {
            pow_eps = 0.0;
        } else if (pow_eps < 0.0) {
            throw DomainError("--epsilon (or --delta) is required for " + pow_alt);
        }

        std::vector<Point> sites;
        if (!pow_y_file.empty()) {
            sites = read_points_csv(pow_y_file);
        } else {
            Rng rng(pow_sites_seed);
            sites = sample_unit_square(pow_sites, rng);
        }
        const DelaunayMesh mesh = delaunay(sites);

        // epsilon = 0 is the null in both alternative families.
        std::vector<std::pair<AlternativeSpec, TestSide>> runs;
        if (pow_eps == 0.0) {
            if (pow_side.empty() || pow_side == "segregation")
                runs.emplace_back(AlternativeSpec::null(), TestSide::Segregation);
            if (pow_side.empty() || pow_side == "association")
                runs.emplace_back(AlternativeSpec::null(), TestSide::Association);
        } else if (pow_alt == "segregation") {
            runs.emplace_back(AlternativeSpec::segregation(pow_eps), TestSide::Segregation);
        } else {
            runs.emplace_back(AlternativeSpec::association(pow_eps), TestSide::Association);
        }

        const CriticalMode mode = pow_critical == "asymptotic" ? CriticalMode::Asymptotic
                                                               : CriticalMode::EmpiricalFromNull;
        std::ostringstream out;
        out << "alternative,epsilon,J,n,replicates,critical_mode,alpha,rate\n";
        for (const auto& [alt, side] : runs) {
            const PowerResult res = power_study(mesh, pow_n, alt, pow_replicates, pow_alpha,
                                                pow_seed, mode, side, pow_opts.threads);
            const std::string name = alt.is_null() ? "null-" + to_string(side)
                                                   : to_string(side);
            out << name << ',' << format_double(alt.is_null() ? 0.0 : alt.epsilon()) << ','
                << mesh.triangle_count() << ',' << pow_n << ',' << pow_replicates << ','
                << pow_critical << ',' << format_double(pow_alpha) << ','
                << format_double(res.rate) << '\n';
        }
        write_text_atomic(pow_opts.out, out.str());
        return 0;
    }

    if (tables->parsed()) {
        if (tab_replicates < 1) throw DomainError("--replicates must be >= 1");
        std::ostringstream out;
        const double se = 3.0 * std::sqrt(0.6 * 0.4 * tab_replicates);
        out << "# three-standard-error half-width at p=0.6 with " << tab_replicates
            << " replicates: +-" << format_double(se) << " counts\n";
        out << "n,r,replicates,seed,count_gamma1,count_gamma2,count_gamma3\n";
        std::vector<int> ns = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 200, 300};
        ns.push_back(tab_large_n);
        for (int n : ns) {
            ReplicationPlan plan;
            plan.n = n;
            plan.replicates = tab_replicates;
            plan.seed = tab_seed + static_cast<std::uint64_t>(n);
            plan.r = RFactor(1.5);
            plan.threads = tab_opts.threads;
            const GammaHistogram h = replicate_gamma(plan);
            out << h.n << ",1.5," << h.replicates << ',' << h.seed << ',' << h.counts[0] << ','
                << h.counts[1] << ',' << h.counts[2] << '\n';
        }
        write_text_atomic(tab_opts.out, out.str());
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const InferenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
