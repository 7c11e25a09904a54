#ifndef FRACFP_FEM1D_HPP
#define FRACFP_FEM1D_HPP

#include <functional>
#include <vector>

namespace fracfp::fem1d {

using SpaceTimeFn = std::function<double(double, double)>;
using SpaceFn = std::function<double(double)>;

/// Uniform partition of (x_left, x_left + length) into P subintervals.
/// Homogeneous Dirichlet conditions leave P-1 interior degrees of freedom.
struct SpatialMesh {
    double x_left = 0.0;
    double length = 0.0;
    int P = 0;
    double h = 0.0;
    std::vector<double> nodes;  ///< nodes[0..P]

    SpatialMesh(double x_left_, double length_, int P_);
    int interior() const { return P - 1; }
    double x_right() const { return x_left + length; }
};

/// Coefficients of a piecewise-linear function at the interior nodes.
struct NodalVector {
    std::vector<double> values;

    NodalVector() = default;
    explicit NodalVector(std::size_t n, double fill = 0.0) : values(n, fill) {}
    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Tridiagonal operator on the interior degrees of freedom.
struct TriDiagMatrix {
    std::vector<double> sub, diag, super;

    TriDiagMatrix() = default;
    explicit TriDiagMatrix(std::size_t n) : sub(n ? n - 1 : 0), diag(n), super(n ? n - 1 : 0) {}
    std::size_t n() const { return diag.size(); }

    NodalVector matvec(const NodalVector& v) const;

    TriDiagMatrix& add_scaled(const TriDiagMatrix& other, double factor);
};

/// Hat-function mass matrix: interior row (h/6, 2h/3, h/6). Exact.
TriDiagMatrix assemble_mass(const SpatialMesh& mesh);

/// Laplacian stiffness matrix: interior row (-1/h, 2/h, -1/h). Exact.
TriDiagMatrix assemble_stiffness(const SpatialMesh& mesh);

/// Convection block C_pq = -int F(x,t) phi_q phi_p' dx, 2-point Gauss per element.
TriDiagMatrix assemble_convection(const SpatialMesh& mesh, const SpaceTimeFn& F, double t);

/// B(t) = stiffness + convection at time t.
TriDiagMatrix assemble_B(const SpatialMesh& mesh, const SpaceTimeFn& F, double t);

/// G_p = int_{t0}^{t1} <g(.,t), phi_p> dt, by Gauss-Legendre rules with
/// time_points nodes on (t0, t1) and space_points nodes per element.
NodalVector load_vector(const SpatialMesh& mesh, const SpaceTimeFn& g, double t0, double t1,
                        int time_points = 2, int space_points = 2);

/// Nodal interpolant of f at the interior nodes (Ritz projection of initial
/// data in the piecewise-linear case).
NodalVector interpolate(const SpatialMesh& mesh, const SpaceFn& f);

/// Composite 3-point Gauss L2 norms over the mesh.
double l2_norm(const SpatialMesh& mesh, const NodalVector& v);
double l2_norm(const SpatialMesh& mesh, const SpaceFn& f);
/// || v_h - f ||_{L2}
double l2_error(const SpatialMesh& mesh, const NodalVector& v, const SpaceFn& f);

/// Exact integral of x * v_h(x) over the mesh (piecewise quadratic integrand).
double first_moment(const SpatialMesh& mesh, const NodalVector& v);

/// Thomas elimination without pivoting. Throws std::runtime_error naming the
/// failing row on pivot breakdown.
NodalVector thomas_solve(const TriDiagMatrix& A, const NodalVector& b);

/// Value of the piecewise-linear function with interior coefficients v at x.
double eval(const SpatialMesh& mesh, const NodalVector& v, double x);

} // namespace fracfp::fem1d

#endif
