#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "orbitdx/errors.hpp"

namespace orbitdx {

/// Exact rational number, always in canonical form (reduced, positive
/// denominator). GMP keeps arithmetic results canonical; the only raw
/// constructor goes through make_rational below.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZeroError on den = 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Renders "n" or "n/d" with no whitespace.
std::string rational_str(const Rational& r);

/**
 * Element of Q(i), the scalar field of the whole library. Both components
 * are reduced rationals, so equality is structural and representations are
 * unique.
 *
 * Text form: "a/b", "a/b+c/d*i" or "a/b-c/d*i" with "/1" omitted, e.g.
 * "3", "-1/5*i", "2+3*i". Rendering is whitespace-free; parsing accepts
 * optional whitespace around tokens and a bare "i".
 */
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int n) : re_(n), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = re^2 + im^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    /// Multiplicative inverse. Throws DivisionByZeroError on zero.
    GaussianRational inv() const;

    std::string str() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Total order for use as a map key (lexicographic on (re, im)); not an
    /// order compatible with the field structure.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

private:
    Rational re_, im_;
};

inline GaussianRational gr(long num, long den = 1) {
    return GaussianRational(make_rational(num, den));
}

} // namespace orbitdx
