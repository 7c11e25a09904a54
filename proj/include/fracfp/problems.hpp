#ifndef FRACFP_PROBLEMS_HPP
#define FRACFP_PROBLEMS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "fracfp/fem1d.hpp"

namespace fracfp::problems {

/// The continuous initial-boundary-value problem
///   u_t - kappa * D_t^{1-alpha} u_xx + (1/mu) * (F D_t^{1-alpha} u)_x = g
/// on (x_left, x_left + length) x (0, T] with homogeneous Dirichlet
/// conditions and u(x,0) = u0(x).
struct ProblemSpec {
    double alpha = 0.5;
    double x_left = 0.0;
    double length = 1.0;
    double T = 1.0;
    fem1d::SpaceTimeFn F;            ///< drift F(x,t)
    fem1d::SpaceTimeFn g;            ///< source; empty means g == 0
    fem1d::SpaceFn u0;               ///< initial data (ignored when random seed set)
    fem1d::SpaceTimeFn exact;        ///< exact solution when known; empty otherwise
    double kappa = 1.0;
    double mu = 1.0;
    std::optional<std::uint64_t> random_u0_seed;  ///< nodal U(0,1) initial data

    bool has_source() const { return static_cast<bool>(g); }
    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Verification problem on (0, pi) with T = 1, drift F = x + sin t and the
/// source chosen so that u = [1 + omega_{1+alpha}(t)] sin x solves the
/// equation. u_t = O(t^{alpha-1}) as t -> 0+.
ProblemSpec manufactured_problem(double alpha);

/// Homogeneous problem on (-L, L): F = -x + sin t, g = 0, u0 a normal
/// density with mean 0 and standard deviation sigma. Throws
/// std::invalid_argument when the Gaussian tail at the boundary exceeds
/// 1e-12 (Dirichlet data would be inconsistent).
ProblemSpec application_problem(double alpha, double sigma, double L, double T);

/// Same drift and domain as application_problem, but the initial data are
/// seeded pseudorandom nodal values in [0,1], materialized when the mesh is
/// known.
ProblemSpec random_initial_problem(double alpha, std::uint64_t seed, double L, double T);

/// Expected position of the limiting (L -> infinity) density:
///   xbar(t) = (1/Gamma(alpha)) * int_0^t E_alpha(-(t-s)^alpha) s^(alpha-1) sin s ds,
/// evaluated after the substitution s = u^(1/alpha) with adaptive composite
/// Gauss quadrature (absolute accuracy ~1e-9). Throws std::runtime_error
/// with the achieved error estimate if the quadrature fails to converge.
double reference_first_moment(double alpha, double t);

/// Materializes the initial nodal vector of a problem on a given mesh:
/// either the interpolant of u0 or the seeded random values.
fem1d::NodalVector initial_data(const ProblemSpec& problem, const fem1d::SpatialMesh& mesh);

} // namespace fracfp::problems

#endif
