// Acceptance suite: one pass/fail line per criterion check, selected with
// --criterion <id>. Exit code 0 iff every check of the selected criterion
// passed. --list prints the known ids.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fracfp/fracops.hpp"
#include "fracfp/harness.hpp"
#include "fracfp/problems.hpp"
#include "fracfp/stepper.hpp"
#include "oracles.hpp"

using namespace fracfp;

namespace {

int g_checks = 0, g_failures = 0;

void check(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok) ++g_failures;
    std::printf("  [%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

void check_rel(double value, double target, double rel_tol, const std::string& what) {
    const double rel = std::abs(value - target) / std::abs(target);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.6g, expect %.6g (rel dev %.2e, tol %.0e)",
                  what.c_str(), value, target, rel, rel_tol);
    check(rel <= rel_tol, buf);
}

void check_abs(double value, double target, double abs_tol, const std::string& what) {
    const double dev = std::abs(value - target);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: got %.4f, expect %.4f (dev %.3f, tol %.2g)",
                  what.c_str(), value, target, dev, abs_tol);
    check(dev <= abs_tol, buf);
}

struct TableColumn {
    double alpha, gamma;
    std::vector<double> E;      // one per refinement level
    std::vector<double> rates;  // from the second level on
};

// ---------------------------------------------------------------- criterion 1
void criterion_1_table1() {
    const std::vector<int> Ns = {80, 160, 320, 640};
    const std::vector<TableColumn> ref = {
        {0.625, 1.0, {8.93e-3, 4.95e-3, 2.80e-3, 1.62e-3}, {0.851, 0.823, 0.791}},
        {0.625, 1.6, {8.60e-3, 4.33e-3, 2.18e-3, 1.09e-3}, {0.989, 0.993, 0.996}},
        {0.625, 2.0, {1.01e-2, 5.09e-3, 2.56e-3, 1.28e-3}, {0.986, 0.992, 0.995}},
    };
    harness::ExperimentConfig config;
    config.alphas = {0.625};
    config.gammas = {1.0, 1.6, 2.0};
    config.num_steps = Ns;
    config.num_elements = {5120};
    const auto rows = harness::run_table(config, harness::Mode::Time);
    std::size_t r = 0;
    for (const auto& col : ref) {
        for (std::size_t i = 0; i < col.E.size(); ++i, ++r) {
            char what[80];
            std::snprintf(what, sizeof what, "E(gamma=%.1f, N=%d)", col.gamma, Ns[i]);
            check_rel(rows[r].E, col.E[i], 0.02, what);
            if (i > 0) {
                std::snprintf(what, sizeof what, "rate(gamma=%.1f, N=%d)", col.gamma, Ns[i]);
                check_abs(*rows[r].rate, col.rates[i - 1], 0.05, what);
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 2
void criterion_2_table2() {
    const std::vector<int> Ns = {80, 160, 320, 640};
    const std::vector<TableColumn> ref = {
        {0.25, 1.0, {1.93e-1, 1.70e-1, 1.50e-1, 1.31e-1}, {}},
        {0.50, 1.0, {2.21e-2, 1.50e-2, 1.04e-2, 7.20e-3}, {}},
        {0.75, 1.0, {7.40e-3, 3.73e-3, 1.88e-3, 9.46e-4}, {}},
    };
    const std::vector<double> finest_rates = {0.19, 0.53, 0.99};
    harness::ExperimentConfig config;
    config.alphas = {0.25, 0.50, 0.75};
    config.gammas = {1.0};
    config.num_steps = Ns;
    config.num_elements = {5120};
    const auto rows = harness::run_table(config, harness::Mode::Time);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ref.size(); ++c) {
        for (std::size_t i = 0; i < ref[c].E.size(); ++i, ++r) {
            char what[80];
            std::snprintf(what, sizeof what, "E(alpha=%.2f, N=%d)", ref[c].alpha, Ns[i]);
            check_rel(rows[r].E, ref[c].E[i], 0.02, what);
            if (i + 1 == ref[c].E.size()) {
                std::snprintf(what, sizeof what, "finest rate(alpha=%.2f)", ref[c].alpha);
                check_abs(*rows[r].rate, finest_rates[c], 0.05, what);
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 3
void criterion_3_table3() {
    const std::vector<int> Ps = {4, 8, 16, 32, 64};
    const std::vector<TableColumn> ref = {
        {0.25, 4.0, {8.43e-2, 2.97e-2, 6.21e-3, 1.50e-3, 3.47e-4}, {1.505, 2.258, 2.052, 2.108}},
        {0.50, 2.0, {8.22e-2, 2.92e-2, 6.07e-3, 1.46e-3, 3.23e-4}, {1.495, 2.264, 2.054, 2.177}},
        {0.75, 4.0 / 3.0, {7.74e-2, 2.77e-2, 5.75e-3, 1.39e-3, 3.03e-4}, {1.483, 2.268, 2.046, 2.201}},
    };
    harness::ExperimentConfig config;
    config.alphas = {0.25, 0.50, 0.75};
    config.num_steps = {10000};
    config.num_elements = Ps;
    const auto rows = harness::run_table(config, harness::Mode::Space);
    std::size_t r = 0;
    for (const auto& col : ref) {
        for (std::size_t i = 0; i < col.E.size(); ++i, ++r) {
            char what[80];
            std::snprintf(what, sizeof what, "E(alpha=%.2f, P=%d)", col.alpha, Ps[i]);
            check_rel(rows[r].E, col.E[i], 0.02, what);
            if (i > 0) {
                std::snprintf(what, sizeof what, "r_x(alpha=%.2f, P=%d)", col.alpha, Ps[i]);
                check_abs(*rows[r].rate, col.rates[i - 1], 0.1, what);
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 4
void criterion_4_rate_curve() {
    harness::ExperimentConfig config;
    config.alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    config.num_steps = {160, 320};
    config.num_elements = {2560};
    const auto pts = harness::run_rate_curve(config);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        char what[96];
        std::snprintf(what, sizeof what, "r_t non-decreasing: r(%.1f)=%.3f >= r(%.1f)=%.3f",
                      pts[i].alpha, pts[i].r_t, pts[i - 1].alpha, pts[i - 1].r_t);
        check(pts[i].r_t >= pts[i - 1].r_t - 0.01, what);
    }
    for (const auto& p : pts) {
        char what[96];
        if (p.alpha <= 0.5) {
            std::snprintf(what, sizeof what, "r_t(%.1f)=%.3f clearly below 1", p.alpha, p.r_t);
            check(p.r_t <= 0.9, what);
        } else if (p.alpha >= 0.6) {
            std::snprintf(what, sizeof what, "|r_t(%.1f) - min(2a,1)| = |%.3f - %.2f| <= 0.1",
                          p.alpha, p.r_t, p.reference);
            check(std::abs(p.r_t - p.reference) <= 0.1, what);
        }
    }
}

// ---------------------------------------------------------------- criterion 5
void criterion_5_positivity() {
    oracles::Rng rng(31415926);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double alpha = rng.uniform(0.05, 0.95);
        const std::size_t len = 1 + (std::size_t)(rng.uniform() * 256.0);
        std::vector<double> u(len);
        for (auto& x : u) x = rng.normal();
        const auto [lhs, rhs] = fracops::conv_quadratic_form(alpha, u);
        const double sumsq = 2.0 * rhs;
        if (!(lhs >= rhs - 1e-12 * sumsq)) ++violations;
    }
    check(violations == 0, "sum (AU)^n U^n >= 0.5 sum (U^n)^2 - 1e-12 sum (U^n)^2 "
                           "for 1000 seeded sequences (violations: " +
                               std::to_string(violations) + ")");

    bool pos = true, mono = true, convex = true;
    for (double alpha : {0.05, 0.25, 0.5, 0.625, 0.75, 0.95}) {
        double a0 = fracops::a_seq(alpha, 0), a1 = fracops::a_seq(alpha, 1);
        for (std::int64_t m = 1; m <= 1'000'000; ++m) {
            const double a2 = fracops::a_seq(alpha, m + 1);
            pos = pos && a1 > 0.0;
            mono = mono && a1 < a0;
            convex = convex && a1 <= 0.5 * (a0 + a2);
            a0 = a1;
            a1 = a2;
        }
    }
    check(pos, "a_m > 0 for m <= 1e6 across alpha grid");
    check(mono, "a_{m+1} < a_m for m <= 1e6 across alpha grid");
    check(convex, "a_{m+1} <= (a_m + a_{m+2})/2 for m <= 1e6 across alpha grid");
}

// ---------------------------------------------------------------- criterion 6
void criterion_6_weights() {
    for (double gamma : {1.0, 1.6, 2.0}) {
        auto mesh = stepper::build_temporal_mesh(10'000, 1.0, gamma);
        const double alpha = 0.625;
        double worst = 0.0;
        for (int n = 1; n <= mesh.N; ++n) {
            const auto w = fracops::weights_row(mesh, alpha, n,
                                                fracops::WeightRoute::IntegralDifference);
            long double sum = 0.0L;
            for (double v : w.row) sum += v;
            const double target = fracops::omega(1.0 + alpha, mesh.t[n]);
            worst = std::max(worst, std::abs((double)sum - target) / target);
        }
        char what[120];
        std::snprintf(what, sizeof what,
                      "telescoping sum_j w_nj = omega_{1+a}(t_n), gamma=%.1f, N=1e4 "
                      "(worst rel %.2e, tol 1e-12)",
                      gamma, worst);
        check(worst <= 1e-12, what);
    }
    {
        auto mesh = stepper::build_temporal_mesh(10'000, 1.0, 1.0);
        double worst = 0.0;
        for (int n : {1, 2, 100, 5000, 10'000}) {
            const auto wi =
                fracops::weights_row(mesh, 0.625, n, fracops::WeightRoute::IntegralDifference);
            const auto wu =
                fracops::weights_row(mesh, 0.625, n, fracops::WeightRoute::UniformShortcut);
            for (int j = 1; j <= n; ++j)
                worst = std::max(worst, std::abs(wi.row[j - 1] - wu.row[j - 1]) / wu.row[j - 1]);
        }
        char what[120];
        std::snprintf(what, sizeof what,
                      "uniform-mesh a_m route matches integral differences (worst rel %.2e, "
                      "tol 1e-13)",
                      worst);
        check(worst <= 1e-13, what);
    }
}

// ---------------------------------------------------------------- criterion 7
void criterion_7_ml_oracles() {
    double worst1 = 0.0;
    for (double z = -30.0; z <= 1.0; z += 0.25)
        worst1 = std::max(worst1, std::abs(fracops::mittag_leffler(1.0, z) - std::exp(z)) /
                                      std::exp(z));
    char what[120];
    std::snprintf(what, sizeof what, "E_1 vs exp on [-30,1] (worst rel %.2e, tol 1e-10)", worst1);
    check(worst1 <= 1e-10, what);

    double worst2 = 0.0;
    for (double z = -30.0; z <= 0.0; z += 0.25) {
        const long double zl = z;
        const double closed = (double)(std::exp(zl * zl) * erfcl(-zl));
        worst2 = std::max(worst2,
                          std::abs(fracops::mittag_leffler(0.5, z) - closed) / closed);
    }
    std::snprintf(what, sizeof what,
                  "E_1/2 vs exp(z^2) erfc(-z) on [-30,0] (worst rel %.2e, tol 1e-6)", worst2);
    check(worst2 <= 1e-6, what);

    double worst3 = 0.0;
    for (double t = 0.0; t <= 20.0; t += 0.25) {
        const double closed = 0.5 * (std::sin(t) - std::cos(t) + std::exp(-t));
        worst3 = std::max(worst3,
                          std::abs(problems::reference_first_moment(1.0, t) - closed));
    }
    std::snprintf(what, sizeof what,
                  "first-moment reference at alpha=1 vs closed form on [0,20] "
                  "(worst abs %.2e, tol 1e-7)",
                  worst3);
    check(worst3 <= 1e-7, what);
}

// ---------------------------------------------------------------- criterion 8
void criterion_8_dense_oracle() {
    for (double alpha : {0.4, 0.625}) {
        for (double gamma : {1.0, 1.8}) {
            auto prob = problems::manufactured_problem(alpha);
            fem1d::SpatialMesh smesh(prob.x_left, prob.length, 8);
            auto tmesh = stepper::build_temporal_mesh(16, prob.T, gamma);
            auto traj = stepper::solve(prob, smesh, tmesh);
            auto oracle = oracles::dense_block_oracle(prob, smesh, tmesh, {});
            const double dev = oracles::max_rel_diff(traj.states, oracle);
            char what[120];
            std::snprintf(what, sizeof what,
                          "marching vs dense block system, alpha=%.3f gamma=%.1f, N=16 P=8 "
                          "(rel dev %.2e, tol 1e-11)",
                          alpha, gamma, dev);
            check(dev <= 1e-11, what);
        }
    }
}

// ---------------------------------------------------------------- criterion 9
void criterion_9_decay() {
    const double kPi = 3.14159265358979323846;
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (auto [N, P] : std::vector<std::pair<int, int>>{{100, 64}, {1000, 256}}) {
            problems::ProblemSpec prob;
            prob.alpha = alpha;
            prob.x_left = 0.0;
            prob.length = kPi;
            prob.T = 1.0;
            prob.F = [](double, double) { return 0.0; };
            prob.u0 = [](double x) { return std::sin(x); };
            fem1d::SpatialMesh smesh(0.0, kPi, P);
            auto tmesh = stepper::build_temporal_mesh(N, 1.0, 1.0);
            auto traj = stepper::solve(prob, smesh, tmesh);
            double prev = fem1d::l2_norm(smesh, traj.states[0]);
            double worst = 0.0;
            for (int n = 1; n <= N; ++n) {
                const double cur = fem1d::l2_norm(smesh, traj.states[n]);
                worst = std::max(worst, (cur - prev) / prev);
                prev = cur;
            }
            char what[120];
            std::snprintf(what, sizeof what,
                          "||U^n|| non-increasing, alpha=%.2f N=%d P=%d "
                          "(worst step growth %.2e, tol 1e-10)",
                          alpha, N, P, worst);
            check(worst <= 1e-10, what);
        }
    }
}

// --------------------------------------------------------------- criterion 10
void criterion_10a_moment_desk() {
    // Bound established by one 4x-refined control run (N=1600, P=4608):
    // max |moment error| = 1.208e-3; first-order refinement implies the desk
    // preset stays below 6x that value.
    const double kDeskMomentBound = 7.2e-3;
    harness::ExperimentConfig config;
    config.alphas = {0.75};
    config.num_steps = {400};
    config.num_elements = {1152};
    config.L = 12.0;
    config.T = 20.0;
    const auto rows = harness::run_moment(config);
    double worst = 0.0;
    bool all_ok = true;
    for (const auto& r : rows) {
        worst = std::max(worst, std::abs(r.error));
        all_ok = all_ok && r.status == "ok";
    }
    check(all_ok, "all reference-moment quadratures converged");
    char what[140];
    std::snprintf(what, sizeof what,
                  "desk preset (L=12,T=20,N=400,P=1152): max |moment error| %.3e <= %.1e "
                  "(bound from one 4x-refined control run)",
                  worst, kDeskMomentBound);
    check(worst <= kDeskMomentBound, what);
}

void criterion_10b_random_stability() {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto prob = problems::random_initial_problem(0.75, seed, 9.0, 40.0);
        fem1d::SpatialMesh smesh(prob.x_left, prob.length, 162);
        auto tmesh = stepper::build_temporal_mesh(400, prob.T, 1.0 / prob.alpha);
        auto traj = stepper::solve(prob, smesh, tmesh);
        const double norm0 = fem1d::l2_norm(smesh, traj.states[0]);
        double worst = 0.0;
        for (int n = 0; n <= tmesh.N; ++n)
            worst = std::max(worst, fem1d::l2_norm(smesh, traj.states[n]));
        char what[140];
        std::snprintf(what, sizeof what,
                      "seed %llu: max_n ||U^n|| = %.4f <= ||U^0|| (1 + 1e-8) = %.4f",
                      (unsigned long long)seed, worst, norm0 * (1.0 + 1e-8));
        check(worst <= norm0 * (1.0 + 1e-8), what);
    }
}

void criterion_10c_full_resolution() {
    // Full-resolution oscillatory-forcing run: L=20, T=70, N=20T, P=2TL^2.
    harness::ExperimentConfig config;
    config.alphas = {0.75};
    config.num_steps = {1400};
    config.num_elements = {56000};
    config.L = 20.0;
    config.T = 70.0;
    const auto rows = harness::run_moment(config);
    bool finite = rows.size() == 1401;
    double worst = 0.0;
    for (const auto& r : rows) {
        finite = finite && std::isfinite(r.moment_num) && r.status == "ok";
        worst = std::max(worst, std::abs(r.error));
    }
    char what[140];
    std::snprintf(what, sizeof what,
                  "full run completed, 1401 finite moment rows, max |moment error| %.3e "
                  "over >10 oscillations",
                  worst);
    check(finite, what);
}

} // namespace

int main(int argc, char** argv) {
    const std::map<std::string, std::function<void()>> criteria = {
        {"1_table1", criterion_1_table1},
        {"2_table2", criterion_2_table2},
        {"3_table3", criterion_3_table3},
        {"4_rate_curve", criterion_4_rate_curve},
        {"5_positivity", criterion_5_positivity},
        {"6_weight_identities", criterion_6_weights},
        {"7_mittag_leffler_oracles", criterion_7_ml_oracles},
        {"8_scheme_vs_dense_oracle", criterion_8_dense_oracle},
        {"9_decay_stability", criterion_9_decay},
        {"10a_moment_desk", criterion_10a_moment_desk},
        {"10b_random_stability", criterion_10b_random_stability},
        {"10c_full_resolution", criterion_10c_full_resolution},
    };

    std::string which;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) which = argv[++i];
        if (arg == "--list") {
            for (const auto& [name, fn] : criteria) std::printf("%s\n", name.c_str());
            return 0;
        }
    }

    std::vector<std::string> selected;
    if (which.empty() || which == "all")
        for (const auto& [name, fn] : criteria) selected.push_back(name);
    else if (criteria.count(which))
        selected.push_back(which);
    else {
        std::fprintf(stderr, "error: unknown criterion %s\n", which.c_str());
        return 2;
    }

    int total_failures = 0;
    for (const auto& name : selected) {
        g_checks = g_failures = 0;
        std::printf("criterion %s:\n", name.c_str());
        criteria.at(name)();
        std::printf("criterion %s: %s (%d/%d checks passed)\n", name.c_str(),
                    g_failures == 0 ? "PASS" : "FAIL", g_checks - g_failures, g_checks);
        std::fflush(stdout);
        total_failures += g_failures;
    }
    return total_failures == 0 ? 0 : 1;
}
