#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace cpn {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() : n_(0) {}
    explicit CMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static CMatrix identity(int n);

    int n() const { return n_; }
    Complex& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const Complex& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    CMatrix adjoint() const;
    Complex trace() const;
    /// Diagonal part, zeros elsewhere.
    CMatrix diag() const;
    /// Largest entry modulus.
    double inf_norm() const;
    bool all_finite() const;

    std::vector<Complex> column(int j) const;
    void set_column(int j, const std::vector<Complex>& v);

    CMatrix operator-() const;
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(Complex s, const CMatrix& a);
    CMatrix& operator+=(const CMatrix& o) { return *this = *this + o; }
    CMatrix& operator-=(const CMatrix& o) { return *this = *this - o; }

private:
    int n_;
    std::vector<Complex> e_;
};

struct EigenResult {
    std::vector<double> values;
    CMatrix vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Eigenvalues come
/// back ascending; inside clusters with gap below 1e-8 the eigenvector
/// columns are re-orthonormalized by modified Gram-Schmidt.
EigenResult hermitian_eigen(const CMatrix& h);

} // namespace cpn
