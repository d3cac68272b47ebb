#pragma once

#include <vector>

#include "cpn/ratfun.hpp"

namespace cpn {

/// Square matrix with RatFun entries, row-major.
class MatRF {
public:
    explicit MatRF(int n);

    static MatRF identity(int n);
    /// s * I
    static MatRF scalar(int n, const RatFun& s);

    int n() const { return n_; }
    RatFun& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    const RatFun& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    MatRF herm_conj() const;
    RatFun trace() const;
    MatRF d_xi() const;
    MatRF d_xibar() const;

    bool is_zero() const;
    bool is_identity() const;

    void reduce_entries();
    MatRF reduced() const {
        MatRF r = *this;
        r.reduce_entries();
        return r;
    }

    MatRF operator-() const;
    friend MatRF operator+(const MatRF& a, const MatRF& b);
    friend MatRF operator-(const MatRF& a, const MatRF& b);
    friend MatRF operator*(const MatRF& a, const MatRF& b);
    friend MatRF operator*(const RatFun& s, const MatRF& a);
    friend MatRF operator/(const MatRF& a, const RatFun& s);
    MatRF& operator+=(const MatRF& o) { return *this = *this + o; }
    MatRF& operator-=(const MatRF& o) { return *this = *this - o; }

    /// Exact entrywise equality.
    friend bool operator==(const MatRF& a, const MatRF& b);

private:
    void check_same(const MatRF& o) const;
    int n_;
    std::vector<RatFun> e_;
};

inline MatRF commutator(const MatRF& a, const MatRF& b) { return a * b - b * a; }

inline bool mat_is_zero(const MatRF& m) { return m.is_zero(); }

} // namespace cpn
