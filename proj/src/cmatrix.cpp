#include "cpn/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cpn/errors.hpp"

namespace cpn {

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

CMatrix CMatrix::diag() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i) m.at(i, i) = at(i, i);
    return m;
}

double CMatrix::inf_norm() const {
    double m = 0.0;
    for (const Complex& v : e_) m = std::max(m, std::abs(v));
    return m;
}

bool CMatrix::all_finite() const {
    for (const Complex& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

std::vector<Complex> CMatrix::column(int j) const {
    std::vector<Complex> v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
}

void CMatrix::set_column(int j, const std::vector<Complex>& v) {
    for (int i = 0; i < n_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

CMatrix CMatrix::operator-() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw LengthMismatch("matrix dimensions differ");
    CMatrix m(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw LengthMismatch("matrix dimensions differ");
    CMatrix m(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw LengthMismatch("matrix dimensions differ");
    CMatrix m(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < a.n_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix m(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
    return m;
}

namespace {

double off_diag_norm(const CMatrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j)
            if (i != j) s += std::norm(h.at(i, j));
    return std::sqrt(s);
}

} // namespace

EigenResult hermitian_eigen(const CMatrix& h) {
    const int n = h.n();
    if ((h - h.adjoint()).inf_norm() >= 1e-10)
        throw NotHermitian("matrix is not Hermitian within 1e-10");

    CMatrix a = h;
    CMatrix u = CMatrix::identity(n);
    const double tol = 1e-14 * std::max(1.0, a.inf_norm());

    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                if (std::abs(apq) <= tol) continue;
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const Complex phase = apq / std::abs(apq);

                const double tau = (app - aqq) / (2.0 * std::abs(apq));
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = t * c * phase;

                for (int i = 0; i < n; ++i) {
                    const Complex aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip + std::conj(s) * aiq;
                    a.at(i, q) = -s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a.at(p, j), aqj = a.at(q, j);
                    a.at(p, j) = c * apj + s * aqj;
                    a.at(q, j) = -std::conj(s) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex uip = u.at(i, p), uiq = u.at(i, q);
                    u.at(i, p) = c * uip + std::conj(s) * uiq;
                    u.at(i, q) = -s * uip + c * uiq;
                }
            }
        }
        converged = off_diag_norm(a) <= tol * n;
    }
    if (!converged) throw NoConvergence("Jacobi sweeps exhausted");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

    EigenResult res;
    res.values.resize(static_cast<std::size_t>(n));
    res.vectors = CMatrix(n);
    for (int j = 0; j < n; ++j) {
        res.values[static_cast<std::size_t>(j)] = a.at(order[static_cast<std::size_t>(j)],
                                                       order[static_cast<std::size_t>(j)]).real();
        res.vectors.set_column(j, u.column(order[static_cast<std::size_t>(j)]));
    }

    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && res.values[static_cast<std::size_t>(hi)] -
                                 res.values[static_cast<std::size_t>(hi - 1)] <
                             1e-8)
            ++hi;
        for (int j = lo; j < hi; ++j) {
            auto v = res.vectors.column(j);
            for (int m = lo; m < j; ++m) {
                const auto w = res.vectors.column(m);
                Complex proj = 0.0;
                for (int i = 0; i < n; ++i)
                    proj += std::conj(w[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
                for (int i = 0; i < n; ++i)
                    v[static_cast<std::size_t>(i)] -= proj * w[static_cast<std::size_t>(i)];
            }
            double norm = 0.0;
            for (const Complex& vi : v) norm += std::norm(vi);
            norm = std::sqrt(norm);
            if (norm < 1e-12) throw InternalError("degenerate eigenvector cluster collapsed");
            for (Complex& vi : v) vi /= norm;
            res.vectors.set_column(j, v);
        }
        lo = hi;
    }
    return res;
}

} // namespace cpn
