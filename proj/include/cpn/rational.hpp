#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

#include "cpn/errors.hpp"

namespace cpn {

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (lowest terms, positive denominator) as long as arithmetic goes
/// through mpq routines, which is all we ever do.
using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

/// Parses "a" or "a/b" (optional leading sign). Throws ParseError on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

double rational_to_double(const Rational& q);

/// Exact complex scalar with rational real and imaginary parts: the
/// coefficient field Q(i) of every polynomial and matrix entry.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// re^2 + im^2, i.e. z * conj(z) as a rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    std::complex<double> to_complex() const {
        return {rational_to_double(re_), rational_to_double(im_)};
    }

    std::string to_string() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

/// Parses the CLI literal form: "a/b", "a/b+c/d*i", "-3*i", "i", with
/// optional signs and either ASCII '-' or U+2212 minus.
GaussianRational parse_gaussian_rational(const std::string& text);

} // namespace cpn
