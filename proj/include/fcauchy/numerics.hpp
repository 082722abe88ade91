#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace fcauchy {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (gmpxx canonicalizes every arithmetic result).
using BigRational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input.
BigRational parse_rational(const std::string& text);

/// Renders "num/den" ("num" when den == 1).
std::string to_string(const BigRational& q);

/// Natural log of |q| for q != 0, robust against values outside double range.
double log_abs(const BigRational& q);

/// Number of bits needed for numerator and denominator; used as a pivot height.
std::size_t height(const BigRational& q);

/// Exact complex number re + i*im with rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long value) : re_(value), im_(0) {}
    GaussianRational(int value) : re_(value), im_(0) {}

    static GaussianRational i() { return {0, 1}; }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 = re^2 + im^2.
    BigRational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical rendering: "a", "bi", "a+bi", "a-bi" with a, b as num/den.
    std::string to_string() const;

private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Exact value rational * pi^(sqrt_pi_power / 2).
struct SqrtPiScaled {
    BigRational rational;
    unsigned sqrt_pi_power = 0;

    friend SqrtPiScaled operator*(const SqrtPiScaled& a, const SqrtPiScaled& b) {
        return {a.rational * b.rational, a.sqrt_pi_power + b.sqrt_pi_power};
    }
    /// Requires a.sqrt_pi_power >= b.sqrt_pi_power; throws std::domain_error
    /// otherwise (the result would carry a negative power of pi) or when b == 0.
    friend SqrtPiScaled operator/(const SqrtPiScaled& a, const SqrtPiScaled& b);
    friend bool operator==(const SqrtPiScaled& a, const SqrtPiScaled& b) {
        if (sgn(a.rational) == 0 || sgn(b.rational) == 0)
            return sgn(a.rational) == sgn(b.rational);
        return a.rational == b.rational && a.sqrt_pi_power == b.sqrt_pi_power;
    }

    double to_double() const;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// I_m = integral_0^inf exp(-r^2) r^m dr, exactly.
SqrtPiScaled radial_moment(unsigned m);

/// I_{2m+2jk+n-1} / I_{2m+n-1} through the closed product
/// (n+2m)(n+2m+2)...(n+2m+2jk-2) / 2^{jk}. All arguments must be >= 1.
BigRational moment_ratio(unsigned m, unsigned k, unsigned j, unsigned n);

/// I_{a+2t} / I_a for t >= 0 (general form of the moment ratio, empty product = 1).
BigRational moment_shift_ratio(unsigned a, unsigned t);

}  // namespace fcauchy
