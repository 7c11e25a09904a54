#include "fracfp/fracops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracfp::fracops {

namespace {

const long double kPi = 3.14159265358979323846264338327950288L;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("alpha must lie strictly inside (0,1), got " +
                                std::to_string(alpha));
}

/// 1 / Gamma(g) in extended precision, zero at the poles g = 0, -1, -2, ...
long double reciprocal_gamma(long double g) {
    if (g > 0.5L) return std::exp(-lgammal(g));
    const long double r = std::round(g);
    if (r == g && g <= 0.0L) return 0.0L;
    // reflection: 1/Gamma(g) = sin(pi g) Gamma(1-g) / pi
    return std::sin(kPi * g) * std::exp(lgammal(1.0L - g)) / kPi;
}

double ml_series(double beta, double z) {
    const long double lb = beta;
    const long double logax = std::log(std::abs((long double)z));
    long double sum = 1.0L, comp = 0.0L;
    long double prev_mag = std::numeric_limits<long double>::max();
    const long double x = std::abs((long double)z);
    for (int n = 1; n <= 200000; ++n) {
        long double mag = std::exp(n * logax - lgammal(1.0L + n * lb));
        long double term = (z < 0.0 && (n & 1)) ? -mag : mag;
        // Kahan step
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (!std::isfinite((double)sum))
            return std::numeric_limits<double>::infinity();
        const bool past_hump = mag < prev_mag && std::pow((long double)n * lb, lb) > x;
        if (past_hump && mag <= std::abs(sum) * 1e-22L) return (double)sum;
        prev_mag = mag;
    }
    if (std::abs(sum) > 1e300L) return std::numeric_limits<double>::infinity();
    throw std::runtime_error("mittag_leffler: series did not converge");
}

double ml_asymptotic(double beta, double z) {
    // E_beta(z) ~ -sum_{k>=1} z^-k / Gamma(1 - k beta) for z -> -inf.
    // The expansion diverges eventually; truncate at the smallest term,
    // tolerating the bumps |Gamma| makes near its poles.
    const long double zl = z;
    long double sum = 0.0L, best = 0.0L;
    long double min_mag = std::numeric_limits<long double>::max();
    long double zpow = 1.0L;
    int rises = 0;
    for (int k = 1; k <= 2000; ++k) {
        zpow /= zl;
        const long double rg = reciprocal_gamma(1.0L - k * (long double)beta);
        if (rg == 0.0L) continue;
        const long double term = zpow * rg;
        const long double mag = std::abs(term);
        if (mag < min_mag) {
            sum += term;
            min_mag = mag;
            best = sum;
            rises = 0;
        } else if (mag < 10.0L * min_mag && rises < 3) {
            sum += term;
            ++rises;
        } else {
            break;
        }
        if (mag <= std::abs(sum) * 1e-22L) {
            best = sum;
            break;
        }
    }
    return (double)(-best);
}

} // namespace

KernelParams::KernelParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    check_alpha(alpha);
    if (!(beta > 0.0)) throw std::domain_error("kernel order beta must be positive");
}

double omega(double beta, double t) {
    if (!(beta > 0.0)) throw std::domain_error("omega: beta must be positive");
    if (t < 0.0) throw std::domain_error("omega: t must be nonnegative");
    if (t == 0.0 && beta < 1.0)
        throw std::domain_error("omega: kernel is singular at t = 0 for beta < 1");
    return std::pow(t, beta - 1.0) / std::tgamma(beta);
}

double a_seq(double alpha, std::int64_t m) {
    check_alpha(alpha);
    if (m < 0) throw std::domain_error("a_seq: m must be nonnegative");
    if (m == 0) return 1.0;
    // (m+1)^a - m^a = m^a * expm1(a * log1p(1/m))
    const double md = (double)m;
    return std::pow(md, alpha) * std::expm1(alpha * std::log1p(1.0 / md));
}

ConvolutionWeights weights_row(const stepper::TemporalMesh& mesh, double alpha, int n,
                               WeightRoute route) {
    check_alpha(alpha);
    if (n < 1 || n > mesh.N)
        throw std::invalid_argument("weights_row: step index out of range");

    const bool use_shortcut =
        route == WeightRoute::UniformShortcut ||
        (route == WeightRoute::Auto && mesh.uniform());
    if (use_shortcut && !mesh.uniform())
        throw std::invalid_argument("weights_row: uniform shortcut on a graded mesh");

    ConvolutionWeights w;
    w.n = n;
    w.row.resize(n);
    w.prev_row.resize(n - 1);

    if (use_shortcut) {
        const double k = mesh.T / mesh.N;
        const double wk = std::pow(k, alpha) / std::tgamma(1.0 + alpha);
        for (int j = 1; j <= n; ++j) w.row[j - 1] = wk * a_seq(alpha, n - j);
        for (int j = 1; j <= n - 1; ++j) w.prev_row[j - 1] = wk * a_seq(alpha, n - 1 - j);
        return w;
    }

    const double gam1a = std::tgamma(1.0 + alpha);
    // w_mj = [ (t_m - t_{j-1})^a - (t_m - t_j)^a ] / Gamma(1+a), evaluated as
    // a^alpha * expm1(alpha * log1p(k_j / a)) so that nearby arguments never cancel.
    auto fill = [&](int m, std::vector<double>& out) {
        for (int j = 1; j < m; ++j) {
            const double a = mesh.t[m] - mesh.t[j];
            out[j - 1] = std::pow(a, alpha) *
                         std::expm1(alpha * std::log1p(mesh.k[j] / a)) / gam1a;
        }
        out[m - 1] = std::pow(mesh.k[m], alpha) / gam1a;
    };
    fill(n, w.row);
    if (n >= 2) fill(n - 1, w.prev_row);
    return w;
}

double mittag_leffler(double beta, double z) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::domain_error("mittag_leffler: beta must lie in (0,1]");
    if (!(z <= 2.0) || std::isnan(z))
        throw std::domain_error("mittag_leffler: argument must be real with z <= 2");
    if (beta == 1.0) return std::exp(z);
    if (z == 0.0) return 1.0;
    // Balance point of series round-off vs. truncation floor of the expansion
    // for a 64-bit significand: |z|^(1/beta) = 22.1.
    const double x_switch = std::pow(22.1, beta);
    if (z > 0.0 || -z <= x_switch) return ml_series(beta, z);
    return ml_asymptotic(beta, z);
}

std::pair<double, double> conv_quadratic_form(double alpha, std::span<const double> u) {
    check_alpha(alpha);
    const std::size_t m = u.size();
    std::vector<double> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = a_seq(alpha, (std::int64_t)i);
    long double lhs = 0.0L, rhs = 0.0L;
    for (std::size_t n = 0; n < m; ++n) {
        long double conv = 0.0L;
        for (std::size_t j = 0; j <= n; ++j) conv += (long double)a[n - j] * u[j];
        lhs += conv * u[n];
        rhs += 0.5L * (long double)u[n] * u[n];
    }
    return {(double)lhs, (double)rhs};
}

} // namespace fracfp::fracops
