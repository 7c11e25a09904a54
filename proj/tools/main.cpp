#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "fracfp/harness.hpp"

namespace {

using fracfp::harness::ExperimentConfig;
using fracfp::harness::Mode;

int run(const ExperimentConfig& config, Mode mode) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!config.out.empty()) {
        file.open(config.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << config.out << "\n";
            return 1;
        }
        os = &file;
    }
    switch (mode) {
        case Mode::Time:
        case Mode::Space:
            write_csv(*os, fracfp::harness::run_table(config, mode));
            break;
        case Mode::RateCurve:
            write_csv(*os, fracfp::harness::run_rate_curve(config));
            break;
        case Mode::Moment:
            write_csv(*os, fracfp::harness::run_moment(config));
            break;
        case Mode::Stability:
            write_csv(*os, fracfp::harness::run_stability(config));
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Solver and experiment harness for the time-fractional Fokker-Planck "
        "equation in one space dimension"};
    app.set_config("--config", "", "flat key=value configuration file");

    ExperimentConfig config;
    std::string mode_name;
    app.add_option("--mode", mode_name, "time | space | moment | rate-curve | stability")
        ->required();
    app.add_option("--problem", config.problem,
                   "manufactured | application | random-initial")
        ->capture_default_str();
    app.add_option("--alpha", config.alphas, "subdiffusion exponent(s) in (0,1)");
    app.add_option("--gamma,--grading", config.gammas,
                   "time mesh grading exponent(s), >= 1; empty selects 1/alpha "
                   "in space/moment modes");
    app.add_option("--num-steps", config.num_steps, "time step count(s) N");
    app.add_option("--num-elements", config.num_elements, "spatial element count(s) P");
    app.add_option("--out", config.out, "output CSV path (default: stdout)");
    app.add_option("--seed", config.seed, "seed for random initial data")
        ->capture_default_str();
    app.add_option("--T", config.T, "time horizon (default: per-problem)");
    app.add_option("--L", config.L, "application domain half-length")
        ->capture_default_str();
    app.add_option("--sigma", config.sigma, "initial Gaussian standard deviation")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    static const std::map<std::string, Mode> modes = {
        {"time", Mode::Time},
        {"space", Mode::Space},
        {"moment", Mode::Moment},
        {"rate-curve", Mode::RateCurve},
        {"stability", Mode::Stability},
    };
    const auto it = modes.find(mode_name);
    if (it == modes.end()) {
        std::cerr << "error: unknown mode " << mode_name << "\n";
        return 1;
    }
    try {
        return run(config, it->second);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
