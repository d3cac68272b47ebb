#pragma once

#include <optional>
#include <vector>

#include "cpn/matrf.hpp"
#include "cpn/seed.hpp"

namespace cpn {

/// The full ladder P_0 ... P_{n-1}: mutually orthogonal rank-one
/// Hermitian projectors summing to the identity.
struct ProjectorTower {
    int n;
    std::vector<MatRF> p;
};

/// (f tensor f^dagger) / (f^dagger f) for the seed components f.
MatRF build_P0(const HoloSeed& seed);

/// Raising ladder dP.P.dbarP / tr(dP.P.dbarP); nullopt when the trace
/// vanishes identically (the input is annihilated).
std::optional<MatRF> pi_plus(const MatRF& P);
/// Lowering ladder dbarP.P.dP / tr(dbarP.P.dP); nullopt on annihilation.
std::optional<MatRF> pi_minus(const MatRF& P);

/// Applies pi_plus n-1 times starting from P_0. Throws
/// PrematureAnnihilation if the ladder dies early and PropositionViolated
/// if the final projector is not annihilated.
ProjectorTower build_tower(const HoloSeed& seed);

/// [d dbar P, P] = 0, exactly.
bool verify_el(const MatRF& P);

/// d[dbar P, P] + dbar[d P, P] = 0, exactly.
bool verify_conservation(const MatRF& P);

/// tr(dP . dbarP)
RatFun lagrangian_density(const MatRF& P);

/// P^dagger = P = P^2 and tr P = 1, exactly.
bool is_rank_one_projector(const MatRF& P);

enum class HolomorphyClass { holomorphic, antiholomorphic, mixed };

/// Classifies by which ladder direction annihilates. Throws
/// DegenerateProjector when both do (constant projector).
HolomorphyClass holomorphy_class(const MatRF& P);

} // namespace cpn
