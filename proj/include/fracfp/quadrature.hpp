#ifndef FRACFP_QUADRATURE_HPP
#define FRACFP_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace fracfp {

/// Gauss-Legendre rule mapped to [0,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [0,1].
/// Rules are computed once per order and cached.
const GaussRule& gauss_legendre_01(int npoints);

/// Integrate f over [a,b] with the n-point Gauss-Legendre rule.
template <class F>
double gauss_integrate(const F& f, double a, double b, int npoints) {
    const GaussRule& r = gauss_legendre_01(npoints);
    const double len = b - a;
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(a + len * r.nodes[i]);
    return len * s;
}

} // namespace fracfp

#endif
