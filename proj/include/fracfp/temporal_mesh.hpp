#ifndef FRACFP_TEMPORAL_MESH_HPP
#define FRACFP_TEMPORAL_MESH_HPP

#include <vector>

namespace fracfp::stepper {

/// Graded time mesh t_n = (n/N)^gamma * T. gamma = 1 gives uniform steps.
struct TemporalMesh {
    int N = 0;
    double T = 0.0;
    double gamma = 1.0;
    std::vector<double> t;  ///< t[0..N], t[0] = 0, t[N] = T
    std::vector<double> k;  ///< k[n] = t[n] - t[n-1] for n >= 1; k[0] = 0

    bool uniform() const { return gamma == 1.0; }
    double k_max() const { return k.empty() ? 0.0 : k.back(); }
};

/// Builds the graded mesh. Throws std::invalid_argument for N < 1, T <= 0
/// or gamma < 1.
TemporalMesh build_temporal_mesh(int N, double T, double gamma);

} // namespace fracfp::stepper

#endif
