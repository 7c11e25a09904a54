#ifndef FRACFP_STEPPER_HPP
#define FRACFP_STEPPER_HPP

#include <span>
#include <vector>

#include "fracfp/fem1d.hpp"
#include "fracfp/fracops.hpp"
#include "fracfp/problems.hpp"
#include "fracfp/temporal_mesh.hpp"

namespace fracfp::stepper {

/// Discrete solution U^0..U^N on a space-time mesh.
struct Trajectory {
    fem1d::SpatialMesh smesh;
    TemporalMesh tmesh;
    std::vector<fem1d::NodalVector> states;  ///< states[n] = U^n
};

struct SolveOptions {
    /// Gauss-Legendre points for the source integral G^n: per time interval
    /// and per spatial element.
    int load_time_gauss = 10;
    int load_space_gauss = 10;
    fracops::WeightRoute weights_route = fracops::WeightRoute::Auto;
};

/// One implicit step: solves
///   (M + w_nn B^n) U^n = M U^{n-1} + G^n - B^n sum_{j<n} (w_nj - w_{n-1,j}) U^j.
/// history spans U^0..U^{n-1}; the history sum is accumulated with
/// compensated summation. Thomas breakdown is reported as "time step too
/// large".
fem1d::NodalVector step(int n, std::span<const fem1d::NodalVector> history,
                        const fem1d::TriDiagMatrix& M, const fem1d::TriDiagMatrix& Bn,
                        const fracops::ConvolutionWeights& weights,
                        const fem1d::NodalVector& Gn);

/// Marches the full trajectory: U^0 from the problem's initial data, then N
/// implicit steps with B^n reassembled at each t_n (stiffness cached,
/// convection recomputed).
Trajectory solve(const problems::ProblemSpec& problem, const fem1d::SpatialMesh& smesh,
                 const TemporalMesh& tmesh, const SolveOptions& options = {});

} // namespace fracfp::stepper

#endif
