#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace cw {

using Rational = mpq_class;

/// Exact rational p/q with canonicalization.
inline Rational rat(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Strict parser for "p" or "p/q" with optional leading sign. Rejects anything
/// else ("1//2", "", "1/0", stray spaces) so malformed CLI input fails early.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Element of Q(i): re + im*i.
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }

    GaussianRational operator*(const GaussianRational& o) const {
        if (im == 0 && o.im == 0) return {re * o.re, Rational(0)};
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    GaussianRational inverse() const;
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

/// Element of the ring Q(i, sqrt2): u + v*sqrt(2) with u, v in Q(i).
/// All arithmetic is exact; this is the scalar type of every algebraic layer.
struct Scalar {
    GaussianRational u, v;

    Scalar() = default;
    Scalar(GaussianRational g) : u(std::move(g)) {}
    Scalar(Rational r) : u(GaussianRational(std::move(r))) {}
    Scalar(long n) : u(GaussianRational(Rational(n))) {}

    static Scalar i() { return Scalar(GaussianRational::i()); }
    static Scalar sqrt2() {
        Scalar s;
        s.v = GaussianRational(Rational(1));
        return s;
    }
    /// 1/sqrt(2) = sqrt(2)/2.
    static Scalar inv_sqrt2() {
        Scalar s;
        s.v = GaussianRational(rat(1, 2));
        return s;
    }

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool is_gaussian() const { return v.is_zero(); }
    bool is_rational() const { return v.is_zero() && u.is_real(); }

    /// Complex conjugation; sqrt(2) is real so only the Gaussian parts flip.
    Scalar conj() const {
        Scalar s;
        s.u = u.conj();
        s.v = v.conj();
        return s;
    }

    Scalar operator-() const {
        Scalar s;
        s.u = -u;
        s.v = -v;
        return s;
    }
    Scalar operator+(const Scalar& o) const {
        Scalar s;
        s.u = u + o.u;
        s.v = v + o.v;
        return s;
    }
    Scalar operator-(const Scalar& o) const {
        Scalar s;
        s.u = u - o.u;
        s.v = v - o.v;
        return s;
    }
    Scalar operator*(const Scalar& o) const {
        Scalar s;
        if (v.is_zero() && o.v.is_zero()) {
            s.u = u * o.u;
            return s;
        }
        GaussianRational two(Rational(2));
        s.u = u * o.u + two * (v * o.v);
        s.v = u * o.v + v * o.u;
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// (u + v s)^-1 = (u - v s) / (u^2 - 2 v^2), s = sqrt(2).
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    bool operator==(const Scalar& o) const { return u == o.u && v == o.v; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        return u.to_complex() + std::sqrt(2.0) * v.to_complex();
    }

    std::string str() const;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }
inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace cw
