#include "cpn/matrf.hpp"

#include "cpn/errors.hpp"

namespace cpn {

MatRF::MatRF(int n) : n_(n) {
    if (n < 1) throw InternalError("matrix dimension must be positive");
    e_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

MatRF MatRF::identity(int n) {
    MatRF m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFun::one();
    return m;
}

MatRF MatRF::scalar(int n, const RatFun& s) {
    MatRF m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

void MatRF::check_same(const MatRF& o) const {
    if (n_ != o.n_) throw LengthMismatch("matrix dimensions differ");
}

MatRF MatRF::herm_conj() const {
    MatRF r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conj_swap();
    return r;
}

RatFun MatRF::trace() const {
    RatFun t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

MatRF MatRF::d_xi() const {
    MatRF r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].d_xi();
    return r;
}

MatRF MatRF::d_xibar() const {
    MatRF r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].d_xibar();
    return r;
}

bool MatRF::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

bool MatRF::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

void MatRF::reduce_entries() {
    for (auto& e : e_) e.reduce();
}

MatRF MatRF::operator-() const {
    MatRF r(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

MatRF operator+(const MatRF& a, const MatRF& b) {
    a.check_same(b);
    MatRF r(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

MatRF operator-(const MatRF& a, const MatRF& b) {
    a.check_same(b);
    MatRF r(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

MatRF operator*(const MatRF& a, const MatRF& b) {
    a.check_same(b);
    MatRF r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            RatFun acc;
            for (int k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

MatRF operator*(const RatFun& s, const MatRF& a) {
    MatRF r(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
    return r;
}

MatRF operator/(const MatRF& a, const RatFun& s) {
    MatRF r(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] / s;
    return r;
}

bool operator==(const MatRF& a, const MatRF& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        if (!(a.e_[k] == b.e_[k])) return false;
    return true;
}

} // namespace cpn
