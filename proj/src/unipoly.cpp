#include "cpn/unipoly.hpp"

#include <algorithm>

#include "cpn/errors.hpp"

namespace cpn {

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
}

std::complex<double> UniPoly::eval(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        if (k < a.c_.size()) r.c_[k] += a.c_[k];
        if (k < b.c_.size()) r.c_[k] += b.c_[k];
    }
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        if (k < a.c_.size()) r.c_[k] += a.c_[k];
        if (k < b.c_.size()) r.c_[k] -= b.c_[k];
    }
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussianRational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const GaussianRational& s, const UniPoly& a) {
    if (s.is_zero()) return UniPoly();
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw InternalError("univariate division by zero polynomial");
    q = UniPoly();
    r = a;
    const GaussianRational inv_lead = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const GaussianRational factor = r.lead() * inv_lead;
        std::vector<GaussianRational> qc(static_cast<std::size_t>(shift) + 1);
        qc.back() = factor;
        UniPoly term(std::move(qc));
        q = q + term;
        r = r - term * b;
    }
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw InternalError("inexact univariate division");
    return q;
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace cpn
