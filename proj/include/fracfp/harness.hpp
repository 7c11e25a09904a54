#ifndef FRACFP_HARNESS_HPP
#define FRACFP_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracfp/stepper.hpp"

namespace fracfp::harness {

/// E_{N,h} = max_{0 <= n <= N} || U^n_h - u(., t_n) ||_{L2}, the norm
/// evaluated with a fixed 10-point Gauss rule over the whole spatial
/// interval (the convention used for all tabulated errors).
double error_ENh(const stepper::Trajectory& traj, const fem1d::SpaceTimeFn& exact);

/// log2(coarse / fine). Throws std::domain_error on non-positive inputs.
double rate(double coarse, double fine);

enum class Mode { Time, Space, Moment, RateCurve, Stability };

struct ExperimentConfig {
    std::string problem = "manufactured";  ///< manufactured | application | random-initial
    std::vector<double> alphas;
    std::vector<double> gammas;     ///< empty in space/moment modes: gamma = 1/alpha
    std::vector<int> num_steps;
    std::vector<int> num_elements;
    std::string out;                ///< output path; empty = stdout
    std::uint64_t seed = 1;
    double T = -1.0;                ///< <0: per-problem default
    double L = 9.0;                 ///< half-length of the application domain
    double sigma = 0.5;
};

struct ConvergenceRow {
    double alpha = 0.0;
    double gamma = 0.0;
    int N = 0;
    int P = 0;
    double E = 0.0;
    std::optional<double> rate;     ///< only from the second row of a column
    std::string status = "ok";
};

/// Solve the verification problem and measure E_{N,h}.
double manufactured_error(double alpha, double gamma, int N, int P);

/// Time-refinement (fixed P, sweep N) or space-refinement (fixed N, sweep P)
/// table. Per-cell failures are recorded in the row and the sweep continues.
std::vector<ConvergenceRow> run_table(const ExperimentConfig& config, Mode mode);

/// r_t(alpha) from the two finest N of the config, uniform time steps.
struct RateCurvePoint {
    double alpha, E_coarse, E_fine, r_t, reference;  ///< reference = min(2 alpha, 1)
};
std::vector<RateCurvePoint> run_rate_curve(const ExperimentConfig& config);

/// Per-step first moment of the numerical solution against the
/// Mittag-Leffler reference, for the application problem.
struct MomentRow {
    int n;
    double t, moment_num, moment_ref, error;
    std::string status = "ok";
};
std::vector<MomentRow> run_moment(const ExperimentConfig& config,
                                  stepper::Trajectory* keep_trajectory = nullptr);

/// Per-step L2 norm of the random-initial-data run.
struct StabilityRow {
    int n;
    double t, norm;
};
std::vector<StabilityRow> run_stability(const ExperimentConfig& config);

/// CSV emission, full-precision (17 significant digits), header included.
void write_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);
void write_csv(std::ostream& os, const std::vector<RateCurvePoint>& rows);
void write_csv(std::ostream& os, const std::vector<MomentRow>& rows);
void write_csv(std::ostream& os, const std::vector<StabilityRow>& rows);

} // namespace fracfp::harness

#endif
