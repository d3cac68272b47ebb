#pragma once

#include <complex>
#include <vector>

#include "cpn/rational.hpp"

namespace cpn {

/// Dense univariate polynomial over Q(i). Holds seed components (in xi)
/// and serves as the coefficient ring of the bivariate gcd (in xibar).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(GaussianRational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly one() { return UniPoly(GaussianRational(1)); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    const GaussianRational& lead() const { return c_.back(); }
    GaussianRational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : GaussianRational();
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    UniPoly monic() const;

    std::complex<double> eval(std::complex<double> x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const GaussianRational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on zero divisor.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);

    /// Quotient of an exact division; throws InternalError if b does not divide a.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Monic gcd over the field Q(i); gcd(0,0) = 0.
UniPoly unipoly_gcd(UniPoly a, UniPoly b);

} // namespace cpn
