#ifndef FRACFP_FRACOPS_HPP
#define FRACFP_FRACOPS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fracfp/temporal_mesh.hpp"

namespace fracfp::fracops {

/// Subdiffusion exponent alpha in (0,1) plus a generic kernel order beta > 0.
/// Construction rejects alpha outside the open interval.
struct KernelParams {
    double alpha;
    double beta;

    KernelParams(double alpha_, double beta_);
};

/// omega_beta(t) = t^(beta-1) / Gamma(beta).
/// Throws std::domain_error when t = 0 and beta < 1 (singular kernel),
/// or for t < 0 or beta <= 0.
double omega(double beta, double t);

/// a_m = (m+1)^alpha - m^alpha, evaluated without subtractive cancellation.
double a_seq(double alpha, std::int64_t m);

/// How the weight row of a step is produced.
enum class WeightRoute {
    Auto,               ///< UniformShortcut on uniform meshes, else IntegralDifference
    IntegralDifference, ///< w_nj = omega_{1+a}(t_n - t_{j-1}) - omega_{1+a}(t_n - t_j)
    UniformShortcut     ///< w_nj = omega_{1+a}(k) * a_{n-j}, uniform meshes only
};

/// Row n of the convolution-quadrature weights together with row n-1,
/// which is what one time step consumes. All entries are positive and
/// each row sums to omega_{1+alpha}(t_n).
struct ConvolutionWeights {
    int n = 0;
    std::vector<double> row;       ///< row[j-1] = w_{n,j},   j = 1..n
    std::vector<double> prev_row;  ///< prev_row[j-1] = w_{n-1,j}, j = 1..n-1

    /// w_{n,j} - w_{n-1,j} for j = 1..n-1 (negative on uniform meshes).
    double diff(int j) const { return row[j - 1] - prev_row[j - 1]; }
};

/// Weights for step n on the given mesh (1 <= n <= N).
ConvolutionWeights weights_row(const stepper::TemporalMesh& mesh, double alpha, int n,
                               WeightRoute route = WeightRoute::Auto);

/// Mittag-Leffler function E_beta(z) for beta in (0,1] and real z <= 2.
/// E_1 is handled as exp. Elsewhere a power series (compensated, extended
/// precision) is used up to |z| = 22.1^beta and the algebraic expansion
/// -sum_k z^-k / Gamma(1-k*beta) beyond, truncated at its smallest term.
double mittag_leffler(double beta, double z);

/// (lhs, rhs) of the discrete convolution positivity inequality:
/// lhs = sum_n (AU)^n U^n with (AU)^n = sum_{j<=n} a_{n-j} U^j,
/// rhs = 0.5 * sum_n (U^n)^2. For any real sequence lhs >= rhs.
std::pair<double, double> conv_quadratic_form(double alpha, std::span<const double> u);

} // namespace fracfp::fracops

#endif
