#pragma once

#include <complex>
#include <vector>

#include "cpn/cmatrix.hpp"
#include "cpn/matrf.hpp"
#include "cpn/tower.hpp"

namespace cpn {

/// Entrywise evaluation at xi = point, xibar = conj(point).
CMatrix eval_mat(const MatRF& m, Complex point);

struct GridSpec {
    Complex center;
    double half_width;
    int samples_per_axis;
    double fd_step;
};

/// Unitary frame diagonalizing every projector of a tower at one point.
/// Column k spans the range of P_k; its phase is fixed by making the
/// component ref[k] real positive.
struct Vframe {
    Complex point;
    CMatrix v;
    std::vector<int> ordering;
    std::vector<int> ref;
};

/// Phase references picked per column: first component of modulus > 1e-6.
Vframe assemble_V(const ProjectorTower& tower, Complex point);
/// Imposed references, for gauge-coherent stencils. Throws RankDeficient
/// when a reference component falls below 1e-6 at this point.
Vframe assemble_V(const ProjectorTower& tower, Complex point, const std::vector<int>& ref);

/// Largest entry of V†V - I.
double unitarity_drift(const Vframe& frame);
/// Largest entry of V†P_kV - I_k over all k.
double diagonalization_drift(const ProjectorTower& tower, const Vframe& frame);

struct VGrid {
    const ProjectorTower* tower;
    GridSpec spec;

    bool contains(Complex point) const;
    Complex point_at(int i, int j) const;
    Vframe frame(Complex point) const;
    Vframe frame(Complex point, const std::vector<int>& ref) const;
};

/// Covariant derivative of V along a real axis (1 or 2) by central
/// differences: D V = dV - V diag(V† dV).
CMatrix cov_deriv_matrix(const VGrid& grid, int axis, Complex point);

/// var(A) = diag(A²) - [diag(A)]²
CMatrix var_op(const CMatrix& a);

/// Every residual of the V-dynamics system at one point, all built from
/// one shared set of central-difference derivatives with step fd_step.
struct ResidualReport {
    Complex point;
    double h;
    double first_expanded;
    double first_covariant;
    double second_expanded;
    double second_covariant;
    double first_gap;
    double second_gap;
    double nu_gap;
    std::vector<double> z;
    double unitarity_drift;
};

ResidualReport residual_report(const ProjectorTower& tower, const GridSpec& grid, Complex point);

double residual_first_form(const ProjectorTower& tower, const GridSpec& grid, Complex point);
double residual_second_form(const ProjectorTower& tower, const GridSpec& grid, Complex point);
double z_equation_residual(const ProjectorTower& tower, int k, const GridSpec& grid,
                           Complex point);

struct Quadrature {
    double value;
    double x_value;
    double density_gap;
};

/// Integral of tr(dP dbarP) over the plane through the stereographic
/// substitution xi = tan(theta/2) e^{i phi}, composite midpoint rule with
/// resolution points per angle. x_value integrates the surface density
/// -tr(dX dbarX) on the same nodes; density_gap is their largest
/// pointwise disagreement.
Quadrature action_quadrature(const MatRF& p, int resolution);

} // namespace cpn
