#include "cpn/surface.hpp"

#include "cpn/errors.hpp"

namespace cpn {

namespace {

RatFun rat(Rational q) {
    return RatFun(GaussianRational(std::move(q)));
}

RatFun imag(Rational q) {
    return RatFun(GaussianRational(Rational(0), std::move(q)));
}

Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Rational surface_constant(int k, int n) { return frac(1 + 2 * k, n); }

MatRF build_surface(const ProjectorTower& tower, int k) {
    if (k < 0 || k >= tower.n)
        throw IndexOutOfRange("surface index " + std::to_string(k) + " outside tower of size " +
                              std::to_string(tower.n));
    ReduceGuard guard;
    MatRF acc = tower.p[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) acc += rat(2) * tower.p[static_cast<std::size_t>(j)];
    acc -= MatRF::scalar(tower.n, rat(surface_constant(k, tower.n)));
    MatRF x = imag(-1) * acc;
    x.reduce_entries();
    return x;
}

SurfaceTower build_surface_tower(const ProjectorTower& tower) {
    SurfaceTower st{tower.n, {}, {}};
    st.x.reserve(static_cast<std::size_t>(tower.n));
    st.c.reserve(static_cast<std::size_t>(tower.n));
    for (int k = 0; k < tower.n; ++k) {
        st.x.push_back(build_surface(tower, k));
        st.c.push_back(surface_constant(k, tower.n));
    }
    return st;
}

bool verify_tangent(const MatRF& X, const MatRF& P) {
    ReduceGuard guard;
    const bool holo = X.d_xi() == imag(-1) * commutator(P.d_xi(), P);
    if (!holo) return false;
    return X.d_xibar() == imag(1) * commutator(P.d_xibar(), P);
}

bool verify_dXdX(const MatRF& X, const MatRF& P) {
    ReduceGuard guard;
    return (X.d_xi() * X.d_xibar() + P.d_xi() * P.d_xibar()).is_zero();
}

bool verify_el_surface(const MatRF& X) {
    ReduceGuard guard;
    return commutator(X.d_xi().d_xibar(), X).is_zero();
}

bool minimal_poly_check(const MatRF& X, int k, int n) {
    if (k < 0 || k >= n)
        throw IndexOutOfRange("surface index " + std::to_string(k) + " outside dimension " +
                              std::to_string(n));
    ReduceGuard guard;
    const Rational ck = surface_constant(k, n);
    std::vector<Rational> lambdas;
    if (k != 0) lambdas.push_back(ck - 2);
    lambdas.push_back(ck - 1);
    if (k != n - 1) lambdas.push_back(ck);

    std::vector<MatRF> factors;
    factors.reserve(lambdas.size());
    for (const auto& l : lambdas) factors.push_back(X - MatRF::scalar(X.n(), imag(l)));

    MatRF full = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) full = full * factors[i];
    if (!full.is_zero()) return false;

    // Minimality: no proper divisor annihilates.
    for (const auto& f : factors)
        if (f.is_zero()) return false;
    if (factors.size() == 3) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if ((factors[i] * factors[j]).is_zero()) return false;
    }
    return true;
}

MatRF invert_linear(const std::vector<MatRF>& surfaces, int k, int n) {
    if (k < 0 || static_cast<std::size_t>(k) >= surfaces.size())
        throw LengthMismatch("need surfaces X_0..X_" + std::to_string(k) + ", got " +
                             std::to_string(surfaces.size()));
    ReduceGuard guard;
    const int sign0 = (k % 2 == 0) ? 1 : -1;
    MatRF acc = rat(Rational(sign0)) * surfaces[0];
    for (int j = 1; j <= k; ++j) {
        const int sign = ((k - j) % 2 == 0) ? 1 : -1;
        acc += rat(Rational(sign)) * (surfaces[static_cast<std::size_t>(j)] - surfaces[static_cast<std::size_t>(j) - 1]);
    }
    MatRF p = imag(1) * acc + MatRF::scalar(n, rat(frac(1, n)));
    p.reduce_entries();
    return p;
}

MatRF invert_quadratic(const MatRF& X, int k, int n) {
    ReduceGuard guard;
    const Rational ck = surface_constant(k, n);
    MatRF p = X * X - imag(2 * (ck - 1)) * X - MatRF::scalar(X.n(), rat(ck * (ck - 2)));
    p.reduce_entries();
    return p;
}

namespace {

std::optional<MatRF> chi(const MatRF& X, const MatRF& P, int n, bool up) {
    auto ladder = up ? pi_plus(P) : pi_minus(P);
    if (!ladder) return std::nullopt;
    ReduceGuard guard;
    const Rational s(up ? -1 : 1);
    MatRF r = X + imag(s) * (*ladder + P) - imag(s * frac(2, n)) * MatRF::identity(n);
    r.reduce_entries();
    return r;
}

} // namespace

std::optional<MatRF> chi_plus(const MatRF& X, const MatRF& P, int n) { return chi(X, P, n, true); }
std::optional<MatRF> chi_minus(const MatRF& X, const MatRF& P, int n) { return chi(X, P, n, false); }

MatRF spin_sum(const SurfaceTower& st) {
    ReduceGuard guard;
    MatRF acc(st.n);
    for (const auto& x : st.x) acc += x;
    MatRF s = imag(frac(-1, 2)) * acc;
    s.reduce_entries();
    return s;
}

bool verify_spin_sum(const SurfaceTower& st, const ProjectorTower& pt) {
    ReduceGuard guard;
    MatRF rhs(pt.n);
    for (int k = 0; k < pt.n; ++k)
        rhs += rat(frac(2 * k - (pt.n - 1), 2)) * pt.p[static_cast<std::size_t>(k)];
    return spin_sum(st) == rhs;
}

} // namespace cpn
