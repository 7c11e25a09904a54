#include "fracfp/stepper.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracfp::stepper {

TemporalMesh build_temporal_mesh(int N, double T, double gamma) {
    if (N < 1) throw std::invalid_argument("build_temporal_mesh: N must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("build_temporal_mesh: T must be positive");
    if (!(gamma >= 1.0)) throw std::invalid_argument("build_temporal_mesh: gamma must be >= 1");
    TemporalMesh m;
    m.N = N;
    m.T = T;
    m.gamma = gamma;
    m.t.resize(N + 1);
    m.k.resize(N + 1);
    m.t[0] = 0.0;
    m.k[0] = 0.0;
    for (int n = 1; n <= N; ++n) {
        m.t[n] = std::pow((double)n / N, gamma) * T;
        m.k[n] = m.t[n] - m.t[n - 1];
    }
    return m;
}

fem1d::NodalVector step(int n, std::span<const fem1d::NodalVector> history,
                        const fem1d::TriDiagMatrix& M, const fem1d::TriDiagMatrix& Bn,
                        const fracops::ConvolutionWeights& weights,
                        const fem1d::NodalVector& Gn) {
    if (weights.n != n) throw std::invalid_argument("step: weights row does not match n");
    if ((int)history.size() != n)
        throw std::invalid_argument("step: history must hold U^0..U^{n-1}");
    const std::size_t ni = M.n();

    fem1d::NodalVector rhs = M.matvec(history[n - 1]);
    for (std::size_t p = 0; p < ni; ++p) rhs[p] += Gn[p];

    if (n > 1) {
        // V = sum_{j=1}^{n-1} (w_nj - w_{n-1,j}) U^j, Kahan-compensated per node.
        fem1d::NodalVector V(ni);
        std::vector<double> comp(ni, 0.0);
        for (int j = 1; j <= n - 1; ++j) {
            const double c = weights.diff(j);
            const fem1d::NodalVector& Uj = history[j];
            for (std::size_t p = 0; p < ni; ++p) {
                const double y = c * Uj[p] - comp[p];
                const double t = V[p] + y;
                comp[p] = (t - V[p]) - y;
                V[p] = t;
            }
        }
        const fem1d::NodalVector BV = Bn.matvec(V);
        for (std::size_t p = 0; p < ni; ++p) rhs[p] -= BV[p];
    }

    fem1d::TriDiagMatrix A = M;
    A.add_scaled(Bn, weights.row[n - 1]);
    try {
        return fem1d::thomas_solve(A, rhs);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error("step " + std::to_string(n) +
                                 ": time step too large (" + e.what() + ")");
    }
}

Trajectory solve(const problems::ProblemSpec& problem, const fem1d::SpatialMesh& smesh,
                 const TemporalMesh& tmesh, const SolveOptions& options) {
    Trajectory traj{smesh, tmesh, {}};
    traj.states.reserve(tmesh.N + 1);
    traj.states.push_back(problems::initial_data(problem, smesh));

    const fem1d::TriDiagMatrix M = fem1d::assemble_mass(smesh);
    const fem1d::TriDiagMatrix stiffness = fem1d::assemble_stiffness(smesh);
    const fem1d::NodalVector zero_load((std::size_t)smesh.interior());

    for (int n = 1; n <= tmesh.N; ++n) {
        fem1d::TriDiagMatrix Bn = stiffness;
        Bn.add_scaled(fem1d::assemble_convection(smesh, problem.F, tmesh.t[n]), 1.0);
        const auto w = fracops::weights_row(tmesh, problem.alpha, n, options.weights_route);
        const fem1d::NodalVector Gn =
            problem.has_source()
                ? fem1d::load_vector(smesh, problem.g, tmesh.t[n - 1], tmesh.t[n],
                                     options.load_time_gauss, options.load_space_gauss)
                : zero_load;
        traj.states.push_back(
            step(n, {traj.states.data(), (std::size_t)n}, M, Bn, w, Gn));
    }
    return traj;
}

} // namespace fracfp::stepper
