#include "fracfp/problems.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "fracfp/fracops.hpp"
#include "fracfp/quadrature.hpp"

namespace fracfp::problems {

namespace {

const double kPi = 3.14159265358979323846;

double gaussian_density(double x, double sigma) {
    return std::exp(-x * x / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
}

struct AdaptiveQuad {
    const std::function<double(double)>& f;
    int points;
    double abs_tol;
    int max_depth;
    double worst_estimate = 0.0;

    double panel(double a, double b) const {
        return gauss_integrate(f, a, b, points);
    }

    double integrate(double a, double b, double tol, int depth) {
        const double whole = panel(a, b);
        const double mid = 0.5 * (a + b);
        const double two = panel(a, mid) + panel(mid, b);
        const double est = std::abs(two - whole);
        if (est < tol || depth >= max_depth) {
            if (depth >= max_depth) worst_estimate = std::max(worst_estimate, est);
            return two;
        }
        return integrate(a, mid, 0.5 * tol, depth + 1) +
               integrate(mid, b, 0.5 * tol, depth + 1);
    }
};

} // namespace

ProblemSpec manufactured_problem(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("manufactured_problem: alpha must lie in (0,1)");
    ProblemSpec p;
    p.alpha = alpha;
    p.x_left = 0.0;
    p.length = kPi;
    p.T = 1.0;
    p.F = [](double x, double t) { return x + std::sin(t); };
    const double ga = std::tgamma(alpha);
    const double g2a = std::tgamma(2.0 * alpha);
    const double g1a = std::tgamma(1.0 + alpha);
    // With u = [1 + omega_{1+a}(t)] sin x:
    //   D_t^{1-a} 1 = omega_a(t),  D_t^{1-a} omega_{1+a} = omega_{2a}(t),
    // so g = omega_a sin x + (omega_a + omega_2a) [2 sin x + (x + sin t) cos x].
    p.g = [alpha, ga, g2a](double x, double t) {
        const double wa = std::pow(t, alpha - 1.0) / ga;
        const double w2a = std::pow(t, 2.0 * alpha - 1.0) / g2a;
        return wa * std::sin(x) +
               (wa + w2a) * (2.0 * std::sin(x) + (x + std::sin(t)) * std::cos(x));
    };
    p.u0 = [](double x) { return std::sin(x); };
    p.exact = [alpha, g1a](double x, double t) {
        return (1.0 + std::pow(t, alpha) / g1a) * std::sin(x);
    };
    return p;
}

ProblemSpec application_problem(double alpha, double sigma, double L, double T) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("application_problem: alpha must lie in (0,1)");
    if (!(sigma > 0.0)) throw std::invalid_argument("application_problem: sigma must be positive");
    const double tail = gaussian_density(L, sigma);
    if (!(tail < 1e-12))
        throw std::invalid_argument(
            "application_problem: Gaussian tail at the boundary is " + std::to_string(tail) +
            ", incompatible with homogeneous Dirichlet data");
    ProblemSpec p;
    p.alpha = alpha;
    p.x_left = -L;
    p.length = 2.0 * L;
    p.T = T;
    p.F = [](double x, double t) { return -x + std::sin(t); };
    p.u0 = [sigma](double x) { return gaussian_density(x, sigma); };
    return p;
}

ProblemSpec random_initial_problem(double alpha, std::uint64_t seed, double L, double T) {
    ProblemSpec p = application_problem(alpha, 0.5, L, T);
    p.u0 = nullptr;
    p.random_u0_seed = seed;
    return p;
}

fem1d::NodalVector initial_data(const ProblemSpec& problem, const fem1d::SpatialMesh& mesh) {
    if (problem.random_u0_seed) {
        std::mt19937_64 gen(*problem.random_u0_seed);
        fem1d::NodalVector v((std::size_t)mesh.interior());
        for (auto& x : v.values)
            x = (double)(gen() >> 11) * 0x1.0p-53;  // uniform in [0,1)
        return v;
    }
    if (!problem.u0) throw std::invalid_argument("initial_data: problem has no initial data");
    return fem1d::interpolate(mesh, problem.u0);
}

double reference_first_moment(double alpha, double t) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::domain_error("reference_first_moment: alpha must lie in (0,1]");
    if (t < 0.0) throw std::domain_error("reference_first_moment: t must be nonnegative");
    if (t == 0.0) return 0.0;
    // Substituting s = u^(1/alpha) removes the s^(alpha-1) factor:
    //   xbar(t) = 1/Gamma(1+alpha) * int_0^(t^alpha) E_a(-(t-u^(1/a))^a) sin(u^(1/a)) du
    const std::function<double(double)> integrand = [alpha, t](double u) {
        const double s = std::pow(u, 1.0 / alpha);
        const double lag = t - s;
        const double z = (lag <= 0.0) ? 0.0 : -std::pow(lag, alpha);
        return fracops::mittag_leffler(alpha, z) * std::sin(s);
    };
    AdaptiveQuad quad{integrand, 7, 1e-9, 32};
    const double value = quad.integrate(0.0, std::pow(t, alpha), 1e-9, 0);
    if (quad.worst_estimate > 1e-7)
        throw std::runtime_error(
            "reference_first_moment: quadrature did not converge, error estimate " +
            std::to_string(quad.worst_estimate));
    return value / std::tgamma(1.0 + alpha);
}

} // namespace fracfp::problems
