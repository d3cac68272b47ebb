#include "cpn/bipoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "cpn/errors.hpp"

namespace cpn {

BiPoly BiPoly::lift(const UniPoly& p, int var) {
    BiPoly r;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const int e = static_cast<int>(k);
        r.t_.emplace(var == 0 ? Monomial{e, 0} : Monomial{0, e}, c[k]);
    }
    return r;
}

int BiPoly::deg_xi() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.a);
    return d;
}

int BiPoly::deg_xibar() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.b);
    return d;
}

BiPoly BiPoly::d_xi() const {
    BiPoly r;
    for (const auto& [m, c] : t_) {
        if (m.a == 0) continue;
        r.t_.emplace(Monomial{m.a - 1, m.b}, GaussianRational(m.a) * c);
    }
    return r;
}

BiPoly BiPoly::d_xibar() const {
    BiPoly r;
    for (const auto& [m, c] : t_) {
        if (m.b == 0) continue;
        r.t_.emplace(Monomial{m.a, m.b - 1}, GaussianRational(m.b) * c);
    }
    return r;
}

BiPoly BiPoly::conj_swap() const {
    BiPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.b, m.a}, c.conj());
    return r;
}

std::complex<double> BiPoly::eval(std::complex<double> xi, std::complex<double> xibar) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [m, c] : t_) {
        std::complex<double> v = c.to_complex();
        for (int k = 0; k < m.a; ++k) v *= xi;
        for (int k = 0; k < m.b; ++k) v *= xibar;
        acc += v;
    }
    return acc;
}

double BiPoly::eval_abs(std::complex<double> xi, std::complex<double> xibar) const {
    const double ax = std::abs(xi), ay = std::abs(xibar);
    double acc = 0.0;
    for (const auto& [m, c] : t_) {
        double v = std::abs(c.to_complex());
        for (int k = 0; k < m.a; ++k) v *= ax;
        for (int k = 0; k < m.b; ++k) v *= ay;
        acc += v;
    }
    return acc;
}

void BiPoly::insert_add(const Monomial& m, const GaussianRational& c) {
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) insert_add(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) insert_add(m, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_)
            r.insert_add(Monomial{ma.a + mb.a, ma.b + mb.b}, ca * cb);
    return r;
}

std::string BiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (m.a > 0) os << "*xi" << (m.a > 1 ? "^" + std::to_string(m.a) : "");
        if (m.b > 0) os << "*xibar" << (m.b > 1 ? "^" + std::to_string(m.b) : "");
    }
    return os.str();
}

std::vector<UniPoly> xi_view(const BiPoly& p) {
    std::vector<std::vector<GaussianRational>> rows(static_cast<std::size_t>(p.deg_xi() + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& row = rows[static_cast<std::size_t>(m.a)];
        if (static_cast<int>(row.size()) <= m.b) row.resize(static_cast<std::size_t>(m.b) + 1);
        row[static_cast<std::size_t>(m.b)] = c;
    }
    std::vector<UniPoly> v;
    v.reserve(rows.size());
    for (auto& row : rows) v.emplace_back(std::move(row));
    return v;
}

BiPoly from_xi_view(const std::vector<UniPoly>& v) {
    BiPoly r;
    for (std::size_t a = 0; a < v.size(); ++a)
        r += BiPoly::term(GaussianRational(1), static_cast<int>(a), 0) * BiPoly::lift(v[a], 1);
    return r;
}

BiPoly bipoly_divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw InternalError("bivariate division by zero polynomial");
    if (a.is_zero()) return BiPoly();
    BiPoly q;
    BiPoly r = a;
    const Monomial lmb = b.terms().rbegin()->first;
    const GaussianRational inv_lead = b.lead_coeff().inverse();
    while (!r.is_zero()) {
        const Monomial lmr = r.terms().rbegin()->first;
        if (lmr.a < lmb.a || lmr.b < lmb.b)
            throw InternalError("inexact bivariate division");
        const BiPoly t = BiPoly::term(r.lead_coeff() * inv_lead, lmr.a - lmb.a, lmr.b - lmb.b);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

/// Content in xi: unipoly gcd (in xibar) of the xi-view coefficients.
UniPoly content_xi(const std::vector<UniPoly>& view) {
    UniPoly g;
    for (const auto& c : view) {
        g = unipoly_gcd(g, c);
        if (!g.is_zero() && g.degree() == 0) break;
    }
    return g;
}

std::vector<UniPoly> primitive_part(const std::vector<UniPoly>& view, const UniPoly& cont) {
    std::vector<UniPoly> pp;
    pp.reserve(view.size());
    for (const auto& c : view)
        pp.push_back(c.is_zero() ? UniPoly() : UniPoly::divide_exact(c, cont));
    return pp;
}

int view_deg(const std::vector<UniPoly>& v) { return static_cast<int>(v.size()) - 1; }

/// Pseudo-remainder of f by g in (Q(i)[xibar])[xi], up to a unit in the
/// coefficient ring; callers take the primitive part afterwards.
std::vector<UniPoly> pseudo_rem(std::vector<UniPoly> f, const std::vector<UniPoly>& g) {
    const UniPoly& lg = g.back();
    while (view_deg(f) >= view_deg(g)) {
        const int shift = view_deg(f) - view_deg(g);
        const UniPoly lf = f.back();
        f.pop_back();
        for (auto& c : f) c = c * lg;
        for (int k = 0; k < view_deg(g); ++k)
            f[static_cast<std::size_t>(k + shift)] = f[static_cast<std::size_t>(k + shift)] - lf * g[static_cast<std::size_t>(k)];
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        if (f.empty()) break;
    }
    return f;
}

/// Grlex-monic normalization.
BiPoly normalized(BiPoly p) {
    if (p.is_zero()) return p;
    p *= p.lead_coeff().inverse();
    return p;
}

std::pair<Monomial, BiPoly> split_monomial_content(const BiPoly& p) {
    int ma = INT_MAX, mb = INT_MAX;
    for (const auto& [m, c] : p.terms()) {
        ma = std::min(ma, m.a);
        mb = std::min(mb, m.b);
    }
    BiPoly core;
    for (const auto& [m, c] : p.terms()) core += BiPoly::term(c, m.a - ma, m.b - mb);
    return {Monomial{ma, mb}, core};
}

} // namespace

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);

    const auto [mon_a, core_a] = split_monomial_content(a);
    const auto [mon_b, core_b] = split_monomial_content(b);
    const Monomial common{std::min(mon_a.a, mon_b.a), std::min(mon_a.b, mon_b.b)};

    BiPoly g;
    if (core_a.deg_xi() == 0 && core_b.deg_xi() == 0) {
        auto va = xi_view(core_a), vb = xi_view(core_b);
        g = BiPoly::lift(unipoly_gcd(va[0], vb[0]), 1);
    } else if (core_a.deg_xi() == 0) {
        auto va = xi_view(core_a);
        g = BiPoly::lift(unipoly_gcd(va[0], content_xi(xi_view(core_b))), 1);
    } else if (core_b.deg_xi() == 0) {
        auto vb = xi_view(core_b);
        g = BiPoly::lift(unipoly_gcd(vb[0], content_xi(xi_view(core_a))), 1);
    } else {
        auto va = xi_view(core_a), vb = xi_view(core_b);
        const UniPoly ca = content_xi(va), cb = content_xi(vb);
        const UniPoly cg = unipoly_gcd(ca, cb);
        std::vector<UniPoly> f = primitive_part(va, ca);
        std::vector<UniPoly> h = primitive_part(vb, cb);
        if (view_deg(f) < view_deg(h)) std::swap(f, h);
        std::vector<UniPoly> core{UniPoly::one()};
        while (true) {
            std::vector<UniPoly> r = pseudo_rem(f, h);
            if (r.empty()) {
                core = h;
                break;
            }
            if (view_deg(r) == 0) break;
            const UniPoly cr = content_xi(r);
            f = std::move(h);
            h = primitive_part(r, cr);
        }
        g = from_xi_view(core) * BiPoly::lift(cg, 1);
    }

    return normalized(BiPoly::term(GaussianRational(1), common.a, common.b) * g);
}

} // namespace cpn
