#include "cpn/tower.hpp"

#include "cpn/errors.hpp"

namespace cpn {

namespace {

std::optional<MatRF> ladder(const MatRF& P, bool raising) {
    ReduceGuard guard;
    const MatRF dP = P.d_xi();
    const MatRF dbP = P.d_xibar();
    const MatRF num = raising ? dP * P * dbP : dbP * P * dP;
    const RatFun t = num.trace();
    if (t.is_zero()) return std::nullopt;
    MatRF r = num / t;
    r.reduce_entries();
    return r;
}

} // namespace

MatRF build_P0(const HoloSeed& seed) {
    const int n = seed.n();
    std::vector<BiPoly> f, fbar;
    f.reserve(static_cast<std::size_t>(n));
    fbar.reserve(static_cast<std::size_t>(n));
    for (const auto& c : seed.components()) {
        f.push_back(BiPoly::lift(c, 0));
        fbar.push_back(f.back().conj_swap());
    }
    BiPoly den;
    for (int i = 0; i < n; ++i) den += f[static_cast<std::size_t>(i)] * fbar[static_cast<std::size_t>(i)];
    if (den.is_zero()) throw ZeroSeed("all seed components are zero");
    MatRF P(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            P.at(i, j) = RatFun(f[static_cast<std::size_t>(i)] * fbar[static_cast<std::size_t>(j)], den);
    return P;
}

std::optional<MatRF> pi_plus(const MatRF& P) { return ladder(P, true); }
std::optional<MatRF> pi_minus(const MatRF& P) { return ladder(P, false); }

ProjectorTower build_tower(const HoloSeed& seed) {
    const int n = seed.n();
    ProjectorTower tower{n, {}};
    tower.p.reserve(static_cast<std::size_t>(n));
    tower.p.push_back(build_P0(seed));
    for (int k = 1; k < n; ++k) {
        auto next = pi_plus(tower.p.back());
        if (!next)
            throw PrematureAnnihilation("raising ladder annihilated at step " + std::to_string(k) +
                                        ", expected " + std::to_string(n - 1) + " steps");
        tower.p.push_back(std::move(*next));
    }
    if (pi_plus(tower.p.back()))
        throw PropositionViolated("tower did not terminate after " + std::to_string(n - 1) + " steps");
    return tower;
}

bool verify_el(const MatRF& P) {
    ReduceGuard guard;
    return commutator(P.d_xi().d_xibar(), P).is_zero();
}

bool verify_conservation(const MatRF& P) {
    ReduceGuard guard;
    const MatRF a = commutator(P.d_xibar(), P).d_xi();
    const MatRF b = commutator(P.d_xi(), P).d_xibar();
    return (a + b).is_zero();
}

RatFun lagrangian_density(const MatRF& P) {
    ReduceGuard guard;
    RatFun density = (P.d_xi() * P.d_xibar()).trace();
    density.reduce();
    return density;
}

bool is_rank_one_projector(const MatRF& P) {
    return P.herm_conj() == P && (P * P - P).is_zero() && P.trace().is_one();
}

HolomorphyClass holomorphy_class(const MatRF& P) {
    const bool plus_dead = !pi_plus(P).has_value();
    const bool minus_dead = !pi_minus(P).has_value();
    if (plus_dead && minus_dead)
        throw DegenerateProjector("constant projector: both ladder directions annihilate");
    if (minus_dead) return HolomorphyClass::holomorphic;
    if (plus_dead) return HolomorphyClass::antiholomorphic;
    return HolomorphyClass::mixed;
}

} // namespace cpn
