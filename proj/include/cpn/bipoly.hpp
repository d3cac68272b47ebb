#pragma once

#include <complex>
#include <map>
#include <string>

#include "cpn/rational.hpp"
#include "cpn/unipoly.hpp"

namespace cpn {

/// Exponent pair xi^a * xibar^b.
struct Monomial {
    int a = 0;
    int b = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then xi exponent.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        const int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        return x.a < y.a;
    }
};

/// Sparse bivariate polynomial in the independent variables xi and xibar
/// with coefficients in Q(i). Only nonzero terms are stored.
class BiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

    BiPoly() = default;
    explicit BiPoly(GaussianRational c) {
        if (!c.is_zero()) t_.emplace(Monomial{0, 0}, std::move(c));
    }
    explicit BiPoly(long v) : BiPoly(GaussianRational(v)) {}

    static BiPoly one() { return BiPoly(GaussianRational(1)); }
    static BiPoly term(GaussianRational c, int a, int b) {
        BiPoly p;
        if (!c.is_zero()) p.t_.emplace(Monomial{a, b}, std::move(c));
        return p;
    }
    static BiPoly xi() { return term(GaussianRational(1), 1, 0); }
    static BiPoly xibar() { return term(GaussianRational(1), 0, 1); }

    /// Lift of a univariate polynomial: var = 0 maps x -> xi, var = 1 maps x -> xibar.
    static BiPoly lift(const UniPoly& p, int var);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0});
    }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first == Monomial{0, 0} && t_.begin()->second.is_one();
    }

    int deg_xi() const;
    int deg_xibar() const;
    /// -1 for the zero polynomial.
    int total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.a + t_.rbegin()->first.b; }
    std::size_t term_count() const { return t_.size(); }

    const TermMap& terms() const { return t_; }
    /// Grlex-leading coefficient; zero for the zero polynomial.
    GaussianRational lead_coeff() const {
        return t_.empty() ? GaussianRational() : t_.rbegin()->second;
    }
    GaussianRational coeff(int a, int b) const {
        auto it = t_.find(Monomial{a, b});
        return it == t_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(0, 0); }

    BiPoly d_xi() const;
    BiPoly d_xibar() const;

    /// Hermitian transform: conjugate every coefficient and swap xi <-> xibar.
    BiPoly conj_swap() const;

    std::complex<double> eval(std::complex<double> xi, std::complex<double> xibar) const;
    /// Sum of term magnitudes at the same point; scale reference for pole detection.
    double eval_abs(std::complex<double> xi, std::complex<double> xibar) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const GaussianRational& s);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [m, c] : a.t_) r.t_.emplace(m, -c);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const GaussianRational& s, BiPoly a) { return a *= s; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

    std::string to_string() const;

private:
    void insert_add(const Monomial& m, const GaussianRational& c);
    TermMap t_;
};

/// View of p as an element of (Q(i)[xibar])[xi]: index = xi power.
std::vector<UniPoly> xi_view(const BiPoly& p);
BiPoly from_xi_view(const std::vector<UniPoly>& v);

/// Quotient of an exact division; throws InternalError if b does not divide a.
BiPoly bipoly_divide_exact(const BiPoly& a, const BiPoly& b);

/// Gcd normalized to grlex-leading coefficient 1; gcd(0,0) = 0.
/// Content/primitive-part split in xi, then a primitive subresultant
/// remainder sequence keeps intermediate coefficient growth in check.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

} // namespace cpn
