#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cpn/bipoly.hpp"

namespace cpn {

/// Rational function in xi and xibar over Q(i).
///
/// Invariants: den is never zero, its grlex-leading coefficient is 1, and
/// the zero function is stored as 0/1. num and den are not kept coprime;
/// arithmetic prefers structural shortcuts (shared denominators) and a
/// full gcd reduction fires automatically once the total degree passes
/// the configurable threshold. Equality is exact (cross-multiplied).
class RatFun {
public:
    RatFun() : den_(BiPoly::one()) {}
    explicit RatFun(BiPoly p) : num_(std::move(p)), den_(BiPoly::one()) {}
    explicit RatFun(GaussianRational c) : num_(BiPoly(std::move(c))), den_(BiPoly::one()) {}
    explicit RatFun(long v) : RatFun(GaussianRational(v)) {}
    RatFun(BiPoly num, BiPoly den);

    static RatFun one() { return RatFun(1); }

    static int reduce_threshold() { return threshold_; }
    static void set_reduce_threshold(int t) { threshold_ = t; }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    /// Cancels gcd(num, den) and renormalizes.
    void reduce();
    RatFun reduced() const {
        RatFun r = *this;
        r.reduce();
        return r;
    }

    RatFun conj_swap() const { return RatFun(num_.conj_swap(), den_.conj_swap()); }

    /// The scalar this function reduces to, if it is constant.
    std::optional<GaussianRational> constant_value() const;

    RatFun d_xi() const;
    RatFun d_xibar() const;

    /// Throws PoleAtPoint when the denominator vanishes to working precision.
    std::complex<double> eval(std::complex<double> xi, std::complex<double> xibar) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    /// Exact value equality.
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const;

private:
    void normalize();
    void maybe_reduce();

    BiPoly num_;
    BiPoly den_;
    inline static int threshold_ = 40;
};

inline bool rf_equal(const RatFun& a, const RatFun& b) { return a == b; }

/// RAII: suspends auto-reduction so structurally shared denominators
/// survive an intermediate computation; restores the threshold on exit.
class ReduceGuard {
public:
    ReduceGuard() : saved_(RatFun::reduce_threshold()) { RatFun::set_reduce_threshold(1 << 20); }
    ~ReduceGuard() { RatFun::set_reduce_threshold(saved_); }
    ReduceGuard(const ReduceGuard&) = delete;
    ReduceGuard& operator=(const ReduceGuard&) = delete;

private:
    int saved_;
};

} // namespace cpn
