#include "cpn/ratfun.hpp"

#include <algorithm>

#include "cpn/errors.hpp"

namespace cpn {

RatFun::RatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalError("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly::one();
        return;
    }
    const GaussianRational lead = den_.lead_coeff();
    if (!lead.is_one()) {
        const GaussianRational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

void RatFun::reduce() {
    if (num_.is_zero() || den_.is_one()) return;
    const BiPoly g = bipoly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = bipoly_divide_exact(num_, g);
        den_ = bipoly_divide_exact(den_, g);
    }
    normalize();
}

void RatFun::maybe_reduce() {
    if (std::max(num_.total_degree(), den_.total_degree()) > threshold_) reduce();
}

RatFun RatFun::d_xi() const {
    if (den_.is_one()) return RatFun(num_.d_xi());
    RatFun r(num_.d_xi() * den_ - num_ * den_.d_xi(), den_ * den_);
    r.maybe_reduce();
    return r;
}

RatFun RatFun::d_xibar() const {
    if (den_.is_one()) return RatFun(num_.d_xibar());
    RatFun r(num_.d_xibar() * den_ - num_ * den_.d_xibar(), den_ * den_);
    r.maybe_reduce();
    return r;
}

std::complex<double> RatFun::eval(std::complex<double> xi, std::complex<double> xibar) const {
    const std::complex<double> d = den_.eval(xi, xibar);
    const double scale = std::max(1.0, den_.eval_abs(xi, xibar));
    if (std::abs(d) <= 1e-12 * scale) throw PoleAtPoint("denominator vanishes at evaluation point");
    return num_.eval(xi, xibar) / d;
}

std::optional<GaussianRational> RatFun::constant_value() const {
    const RatFun r = reduced();
    if (!r.num_.is_constant() || !r.den_.is_constant()) return std::nullopt;
    return r.num_.constant_term() * r.den_.constant_term().inverse();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    RatFun r;
    if (a.den_ == b.den_) {
        r = RatFun(a.num_ + b.num_, a.den_);
    } else if (a.den_.is_one()) {
        r = RatFun(a.num_ * b.den_ + b.num_, b.den_);
    } else if (b.den_.is_one()) {
        r = RatFun(a.num_ + b.num_ * a.den_, a.den_);
    } else {
        r = RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    r.maybe_reduce();
    return r;
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    RatFun r(a.num_ * b.num_, a.den_ * b.den_);
    r.maybe_reduce();
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw InternalError("division by zero rational function");
    if (a.is_zero()) return RatFun();
    RatFun r;
    if (a.den_ == b.den_) {
        r = RatFun(a.num_, b.num_);
    } else {
        r = RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    r.maybe_reduce();
    return r;
}

std::string RatFun::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace cpn
