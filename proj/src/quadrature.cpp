#include "fracfp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracfp {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_eval(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule build_rule(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: need at least one point");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.5;
        rule.weights[0] = 1.0;
        return rule;
    }
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-type initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre_eval(n, x, p, dp);
            const double dx = -p / dp;
            x += dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre_eval(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);     // symmetric partner below
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre_01(int npoints) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(npoints);
    if (it == cache.end()) it = cache.emplace(npoints, build_rule(npoints)).first;
    return it->second;
}

} // namespace fracfp
