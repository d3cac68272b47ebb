#pragma once

#include <optional>
#include <vector>

#include "cpn/tower.hpp"

namespace cpn {

/// Immersion surfaces X_0 ... X_{n-1} of a projector tower, with the
/// affine constants c_k = (1+2k)/n. Each X_k is anti-Hermitian and
/// traceless, and all surfaces commute pairwise.
struct SurfaceTower {
    int n;
    std::vector<MatRF> x;
    std::vector<Rational> c;
};

Rational surface_constant(int k, int n);

/// X_k = -i(P_k + 2 sum_{j<k} P_j - c_k I)
MatRF build_surface(const ProjectorTower& tower, int k);

SurfaceTower build_surface_tower(const ProjectorTower& tower);

/// dX = -i[dP, P] and dbarX = i[dbarP, P], exactly.
bool verify_tangent(const MatRF& X, const MatRF& P);

/// dX.dbarX + dP.dbarP = 0, exactly.
bool verify_dXdX(const MatRF& X, const MatRF& P);

/// [d dbar X, X] = 0, exactly.
bool verify_el_surface(const MatRF& X);

/// The designated minimal polynomial annihilates X_k and no proper
/// divisor does: factors (X - i*lambda*I) over lambda in {c_k, c_k-1,
/// c_k-2}, dropping c_k-2 at k=0 and c_k at k=n-1.
bool minimal_poly_check(const MatRF& X, int k, int n);

/// i(sum_{j=1}^{k} (-1)^{k-j}(X_j - X_{j-1}) + (-1)^k X_0) + (1/n)I
MatRF invert_linear(const std::vector<MatRF>& surfaces, int k, int n);

/// X^2 - 2i(c_k - 1)X - c_k(c_k - 2)I
MatRF invert_quadratic(const MatRF& X, int k, int n);

/// Maps X_k to X_{k+1} (resp. X_{k-1}); nullopt at the tower end where
/// the ladder annihilates.
std::optional<MatRF> chi_plus(const MatRF& X, const MatRF& P, int n);
std::optional<MatRF> chi_minus(const MatRF& X, const MatRF& P, int n);

/// -(i/2) sum_k X_k
MatRF spin_sum(const SurfaceTower& st);

/// spin_sum equals sum_k (k - (n-1)/2) P_k, exactly.
bool verify_spin_sum(const SurfaceTower& st, const ProjectorTower& pt);

} // namespace cpn
