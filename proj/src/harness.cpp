#include "fracfp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fracfp/quadrature.hpp"

namespace fracfp::harness {

namespace {

constexpr int kErrorNormGaussPoints = 10;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void run_indexed(std::size_t count, const std::function<void(std::size_t)>& work) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned nthreads = (unsigned)std::min<std::size_t>(hw, count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

double default_gamma(const ExperimentConfig& config, double alpha, std::size_t idx) {
    if (config.gammas.empty()) return 1.0 / alpha;
    return config.gammas[idx % config.gammas.size()];
}

problems::ProblemSpec make_problem(const ExperimentConfig& config, double alpha) {
    if (config.problem == "manufactured") return problems::manufactured_problem(alpha);
    const double T = config.T > 0.0 ? config.T : 10.0;
    if (config.problem == "application")
        return problems::application_problem(alpha, config.sigma, config.L, T);
    if (config.problem == "random-initial")
        return problems::random_initial_problem(alpha, config.seed, config.L, T);
    throw std::invalid_argument("unknown problem id: " + config.problem);
}

} // namespace

double error_ENh(const stepper::Trajectory& traj, const fem1d::SpaceTimeFn& exact) {
    const fem1d::SpatialMesh& mesh = traj.smesh;
    const GaussRule& rule = gauss_legendre_01(kErrorNormGaussPoints);
    const std::size_t q = rule.nodes.size();
    std::vector<double> xq(q), wq(q);
    for (std::size_t i = 0; i < q; ++i) {
        xq[i] = mesh.x_left + mesh.length * rule.nodes[i];
        wq[i] = mesh.length * rule.weights[i];
    }
    double worst = 0.0;
    for (int n = 0; n <= traj.tmesh.N; ++n) {
        const double tn = traj.tmesh.t[n];
        double s = 0.0;
        for (std::size_t i = 0; i < q; ++i) {
            const double d = fem1d::eval(mesh, traj.states[n], xq[i]) - exact(xq[i], tn);
            s += wq[i] * d * d;
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

double rate(double coarse, double fine) {
    if (!(coarse > 0.0) || !(fine > 0.0))
        throw std::domain_error("rate: both errors must be positive");
    return std::log2(coarse / fine);
}

double manufactured_error(double alpha, double gamma, int N, int P) {
    const problems::ProblemSpec problem = problems::manufactured_problem(alpha);
    const fem1d::SpatialMesh smesh(problem.x_left, problem.length, P);
    const stepper::TemporalMesh tmesh = stepper::build_temporal_mesh(N, problem.T, gamma);
    const stepper::Trajectory traj = stepper::solve(problem, smesh, tmesh);
    return error_ENh(traj, problem.exact);
}

std::vector<ConvergenceRow> run_table(const ExperimentConfig& config, Mode mode) {
    if (config.problem != "manufactured")
        throw std::invalid_argument("run_table: tables need the manufactured problem");
    if (config.alphas.empty() || config.num_steps.empty() || config.num_elements.empty())
        throw std::invalid_argument("run_table: alpha, num-steps and num-elements required");

    std::vector<ConvergenceRow> rows;
    if (mode == Mode::Time) {
        const int P = config.num_elements.front();
        const std::vector<double> gammas =
            config.gammas.empty() ? std::vector<double>{1.0} : config.gammas;
        for (double alpha : config.alphas)
            for (double gamma : gammas)
                for (int N : config.num_steps)
                    rows.push_back({alpha, gamma, N, P, 0.0, std::nullopt, "pending"});
    } else if (mode == Mode::Space) {
        const int N = config.num_steps.front();
        for (std::size_t ia = 0; ia < config.alphas.size(); ++ia) {
            const double alpha = config.alphas[ia];
            const double gamma = default_gamma(config, alpha, ia);
            for (int P : config.num_elements)
                rows.push_back({alpha, gamma, N, P, 0.0, std::nullopt, "pending"});
        }
    } else {
        throw std::invalid_argument("run_table: mode must be time or space");
    }

    run_indexed(rows.size(), [&](std::size_t i) {
        ConvergenceRow& r = rows[i];
        try {
            r.E = manufactured_error(r.alpha, r.gamma, r.N, r.P);
            r.status = "ok";
        } catch (const std::exception& e) {
            r.E = std::nan("");
            r.status = std::string("error: ") + e.what();
        }
    });

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const ConvergenceRow& prev = rows[i - 1];
        ConvergenceRow& cur = rows[i];
        const bool same_column = prev.alpha == cur.alpha && prev.gamma == cur.gamma &&
                                 (mode == Mode::Time ? prev.P == cur.P : prev.N == cur.N);
        if (same_column && prev.status == "ok" && cur.status == "ok" && prev.E > 0.0 &&
            cur.E > 0.0)
            cur.rate = rate(prev.E, cur.E);
    }
    return rows;
}

std::vector<RateCurvePoint> run_rate_curve(const ExperimentConfig& config) {
    for (double g : config.gammas)
        if (g != 1.0)
            throw std::invalid_argument("run_rate_curve: requires uniform time steps");
    if (config.num_steps.size() < 2)
        throw std::invalid_argument("run_rate_curve: need two step counts");
    std::vector<int> ns = config.num_steps;
    std::sort(ns.begin(), ns.end());
    const int N1 = ns[ns.size() - 2], N2 = ns[ns.size() - 1];
    const int P = config.num_elements.empty() ? 2560 : config.num_elements.front();

    std::vector<RateCurvePoint> pts(config.alphas.size());
    run_indexed(pts.size(), [&](std::size_t i) {
        const double a = config.alphas[i];
        const double e1 = manufactured_error(a, 1.0, N1, P);
        const double e2 = manufactured_error(a, 1.0, N2, P);
        pts[i] = {a, e1, e2, rate(e1, e2), std::min(2.0 * a, 1.0)};
    });
    return pts;
}

std::vector<MomentRow> run_moment(const ExperimentConfig& config,
                                  stepper::Trajectory* keep_trajectory) {
    if (config.alphas.empty() || config.num_steps.empty() || config.num_elements.empty())
        throw std::invalid_argument("run_moment: alpha, num-steps and num-elements required");
    const double alpha = config.alphas.front();
    ExperimentConfig app = config;
    app.problem = "application";
    const problems::ProblemSpec problem = make_problem(app, alpha);
    const fem1d::SpatialMesh smesh(problem.x_left, problem.length, config.num_elements.front());
    const stepper::TemporalMesh tmesh = stepper::build_temporal_mesh(
        config.num_steps.front(), problem.T, default_gamma(config, alpha, 0));
    stepper::Trajectory traj = stepper::solve(problem, smesh, tmesh);

    std::vector<MomentRow> rows(tmesh.N + 1);
    run_indexed(rows.size(), [&](std::size_t n) {
        MomentRow& r = rows[n];
        r.n = (int)n;
        r.t = tmesh.t[n];
        r.moment_num = fem1d::first_moment(smesh, traj.states[n]);
        try {
            r.moment_ref = problems::reference_first_moment(alpha, r.t);
            r.error = r.moment_num - r.moment_ref;
        } catch (const std::exception& e) {
            r.moment_ref = std::nan("");
            r.error = std::nan("");
            r.status = std::string("error: ") + e.what();
        }
    });
    if (keep_trajectory) *keep_trajectory = std::move(traj);
    return rows;
}

std::vector<StabilityRow> run_stability(const ExperimentConfig& config) {
    if (config.alphas.empty() || config.num_steps.empty() || config.num_elements.empty())
        throw std::invalid_argument("run_stability: alpha, num-steps and num-elements required");
    const double alpha = config.alphas.front();
    ExperimentConfig rnd = config;
    rnd.problem = "random-initial";
    if (rnd.T <= 0.0) rnd.T = 40.0;
    const problems::ProblemSpec problem = make_problem(rnd, alpha);
    const fem1d::SpatialMesh smesh(problem.x_left, problem.length, config.num_elements.front());
    const stepper::TemporalMesh tmesh = stepper::build_temporal_mesh(
        config.num_steps.front(), problem.T, default_gamma(config, alpha, 0));
    const stepper::Trajectory traj = stepper::solve(problem, smesh, tmesh);

    std::vector<StabilityRow> rows(tmesh.N + 1);
    for (int n = 0; n <= tmesh.N; ++n)
        rows[n] = {n, tmesh.t[n], fem1d::l2_norm(smesh, traj.states[n])};
    return rows;
}

void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "alpha,gamma,N,P,E_Nh,rate,status\n";
    for (const auto& r : rows) {
        os << fmt(r.alpha) << ',' << fmt(r.gamma) << ',' << r.N << ',' << r.P << ','
           << fmt(r.E) << ',' << (r.rate ? fmt(*r.rate) : std::string()) << ',' << r.status
           << '\n';
    }
}

void write_csv(std::ostream& os, const std::vector<RateCurvePoint>& rows) {
    os << "alpha,E_coarse,E_fine,r_t,min_2alpha_1\n";
    for (const auto& r : rows)
        os << fmt(r.alpha) << ',' << fmt(r.E_coarse) << ',' << fmt(r.E_fine) << ','
           << fmt(r.r_t) << ',' << fmt(r.reference) << '\n';
}

void write_csv(std::ostream& os, const std::vector<MomentRow>& rows) {
    os << "n,t,moment_num,moment_ref,error,status\n";
    for (const auto& r : rows)
        os << r.n << ',' << fmt(r.t) << ',' << fmt(r.moment_num) << ',' << fmt(r.moment_ref)
           << ',' << fmt(r.error) << ',' << r.status << '\n';
}

void write_csv(std::ostream& os, const std::vector<StabilityRow>& rows) {
    os << "n,t,l2_norm\n";
    for (const auto& r : rows)
        os << r.n << ',' << fmt(r.t) << ',' << fmt(r.norm) << '\n';
}

} // namespace fracfp::harness
