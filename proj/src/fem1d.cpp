#include "fracfp/fem1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracfp/quadrature.hpp"

namespace fracfp::fem1d {

SpatialMesh::SpatialMesh(double x_left_, double length_, int P_)
    : x_left(x_left_), length(length_), P(P_) {
    if (P < 2) throw std::invalid_argument("SpatialMesh: need at least 2 subintervals");
    if (!(length > 0.0)) throw std::invalid_argument("SpatialMesh: length must be positive");
    h = length / P;
    nodes.resize(P + 1);
    for (int p = 0; p <= P; ++p) nodes[p] = x_left + p * h;
}

NodalVector TriDiagMatrix::matvec(const NodalVector& v) const {
    const std::size_t m = n();
    NodalVector r(m);
    for (std::size_t i = 0; i < m; ++i) {
        double s = diag[i] * v[i];
        if (i > 0) s += sub[i - 1] * v[i - 1];
        if (i + 1 < m) s += super[i] * v[i + 1];
        r[i] = s;
    }
    return r;
}

TriDiagMatrix& TriDiagMatrix::add_scaled(const TriDiagMatrix& other, double factor) {
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] += factor * other.diag[i];
    for (std::size_t i = 0; i < sub.size(); ++i) {
        sub[i] += factor * other.sub[i];
        super[i] += factor * other.super[i];
    }
    return *this;
}

TriDiagMatrix assemble_mass(const SpatialMesh& mesh) {
    TriDiagMatrix m((std::size_t)mesh.interior());
    std::fill(m.diag.begin(), m.diag.end(), 2.0 * mesh.h / 3.0);
    std::fill(m.sub.begin(), m.sub.end(), mesh.h / 6.0);
    std::fill(m.super.begin(), m.super.end(), mesh.h / 6.0);
    return m;
}

TriDiagMatrix assemble_stiffness(const SpatialMesh& mesh) {
    TriDiagMatrix a((std::size_t)mesh.interior());
    std::fill(a.diag.begin(), a.diag.end(), 2.0 / mesh.h);
    std::fill(a.sub.begin(), a.sub.end(), -1.0 / mesh.h);
    std::fill(a.super.begin(), a.super.end(), -1.0 / mesh.h);
    return a;
}

TriDiagMatrix assemble_convection(const SpatialMesh& mesh, const SpaceTimeFn& F, double t) {
    const int ni = mesh.interior();
    const double h = mesh.h;
    TriDiagMatrix c((std::size_t)ni);
    const GaussRule& gl2 = gauss_legendre_01(2);
    // Element e joins nodes e and e+1; phi_left' = -1/h, phi_right' = +1/h.
    for (int e = 0; e < mesh.P; ++e) {
        double int_FL = 0.0, int_FR = 0.0;  // int_e F*phi_left, int_e F*phi_right
        for (std::size_t q = 0; q < gl2.nodes.size(); ++q) {
            const double xi = gl2.nodes[q];
            const double x = mesh.nodes[e] + h * xi;
            const double Fx = F(x, t);
            int_FL += gl2.weights[q] * h * Fx * (1.0 - xi);
            int_FR += gl2.weights[q] * h * Fx * xi;
        }
        const int pl = e - 1, pr = e;  // interior indices of the element's nodes
        if (pl >= 0) {
            c.diag[pl] += int_FL / h;                 // p = q = left node
            if (pr <= ni - 1) c.super[pl] += int_FR / h;
        }
        if (pr <= ni - 1) {
            c.diag[pr] -= int_FR / h;                 // p = q = right node
            if (pl >= 0) c.sub[pl] -= int_FL / h;
        }
    }
    return c;
}

TriDiagMatrix assemble_B(const SpatialMesh& mesh, const SpaceTimeFn& F, double t) {
    TriDiagMatrix b = assemble_stiffness(mesh);
    b.add_scaled(assemble_convection(mesh, F, t), 1.0);
    return b;
}

NodalVector load_vector(const SpatialMesh& mesh, const SpaceTimeFn& g, double t0, double t1,
                        int time_points, int space_points) {
    const int ni = mesh.interior();
    const double h = mesh.h;
    NodalVector G((std::size_t)ni);
    const GaussRule& gt = gauss_legendre_01(time_points);
    const GaussRule& gx = gauss_legendre_01(space_points);
    const double dt = t1 - t0;
    for (std::size_t qt = 0; qt < gt.nodes.size(); ++qt) {
        const double tt = t0 + dt * gt.nodes[qt];
        const double wt = dt * gt.weights[qt];
        for (int e = 0; e < mesh.P; ++e) {
            for (std::size_t qx = 0; qx < gx.nodes.size(); ++qx) {
                const double xi = gx.nodes[qx];
                const double gv = wt * gx.weights[qx] * h * g(mesh.nodes[e] + h * xi, tt);
                if (e >= 1) G[e - 1] += gv * (1.0 - xi);
                if (e <= ni - 1) G[e] += gv * xi;
            }
        }
    }
    return G;
}

NodalVector interpolate(const SpatialMesh& mesh, const SpaceFn& f) {
    NodalVector v((std::size_t)mesh.interior());
    for (int p = 1; p < mesh.P; ++p) v[p - 1] = f(mesh.nodes[p]);
    return v;
}

double eval(const SpatialMesh& mesh, const NodalVector& v, double x) {
    int e = (int)std::floor((x - mesh.x_left) / mesh.h);
    e = std::clamp(e, 0, mesh.P - 1);
    const double xl = mesh.nodes[e], xr = mesh.nodes[e + 1];
    const double vl = (e >= 1) ? v[e - 1] : 0.0;
    const double vr = (e + 1 <= mesh.P - 1) ? v[e] : 0.0;
    return (vl * (xr - x) + vr * (x - xl)) / mesh.h;
}

namespace {

template <class Fn>
double l2_composite(const SpatialMesh& mesh, const Fn& f2) {
    const GaussRule& g3 = gauss_legendre_01(3);
    double s = 0.0;
    for (int e = 0; e < mesh.P; ++e) {
        for (std::size_t q = 0; q < g3.nodes.size(); ++q)
            s += g3.weights[q] * mesh.h * f2(e, g3.nodes[q]);
    }
    return std::sqrt(s);
}

} // namespace

double l2_norm(const SpatialMesh& mesh, const NodalVector& v) {
    return l2_composite(mesh, [&](int e, double xi) {
        const double vl = (e >= 1) ? v[e - 1] : 0.0;
        const double vr = (e + 1 <= mesh.P - 1) ? v[e] : 0.0;
        const double u = vl * (1.0 - xi) + vr * xi;
        return u * u;
    });
}

double l2_norm(const SpatialMesh& mesh, const SpaceFn& f) {
    return l2_composite(mesh, [&](int e, double xi) {
        const double u = f(mesh.nodes[e] + mesh.h * xi);
        return u * u;
    });
}

double l2_error(const SpatialMesh& mesh, const NodalVector& v, const SpaceFn& f) {
    return l2_composite(mesh, [&](int e, double xi) {
        const double vl = (e >= 1) ? v[e - 1] : 0.0;
        const double vr = (e + 1 <= mesh.P - 1) ? v[e] : 0.0;
        const double d = vl * (1.0 - xi) + vr * xi - f(mesh.nodes[e] + mesh.h * xi);
        return d * d;
    });
}

double first_moment(const SpatialMesh& mesh, const NodalVector& v) {
    // int_e x * (vl phi_l + vr phi_r) = h/6 * [ vl (2 xl + xr) + vr (xl + 2 xr) ]
    double s = 0.0;
    for (int e = 0; e < mesh.P; ++e) {
        const double xl = mesh.nodes[e], xr = mesh.nodes[e + 1];
        const double vl = (e >= 1) ? v[e - 1] : 0.0;
        const double vr = (e + 1 <= mesh.P - 1) ? v[e] : 0.0;
        s += mesh.h / 6.0 * (vl * (2.0 * xl + xr) + vr * (xl + 2.0 * xr));
    }
    return s;
}

NodalVector thomas_solve(const TriDiagMatrix& A, const NodalVector& b) {
    const std::size_t m = A.n();
    if (b.size() != m) throw std::invalid_argument("thomas_solve: size mismatch");
    std::vector<double> c(m), d(m);
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        scale = std::max(scale, std::abs(A.diag[i]));
    const double tiny = 1e-14 * scale;

    double piv = A.diag[0];
    if (std::abs(piv) <= tiny)
        throw std::runtime_error("thomas_solve: pivot breakdown at row 0");
    c[0] = (m > 1) ? A.super[0] / piv : 0.0;
    d[0] = b[0] / piv;
    for (std::size_t i = 1; i < m; ++i) {
        piv = A.diag[i] - A.sub[i - 1] * c[i - 1];
        if (std::abs(piv) <= tiny)
            throw std::runtime_error("thomas_solve: pivot breakdown at row " +
                                     std::to_string(i));
        if (i + 1 < m) c[i] = A.super[i] / piv;
        d[i] = (b[i] - A.sub[i - 1] * d[i - 1]) / piv;
    }
    NodalVector x(m);
    x[m - 1] = d[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

} // namespace fracfp::fem1d
