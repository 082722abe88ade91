#include "fcauchy/numerics.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace fcauchy {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("malformed rational '" + text + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational '" + text + "'");
        return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash == std::string::npos)
        return BigRational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const BigRational& q) {
    return q.get_str(10);
}

double log_abs(const BigRational& q) {
    if (sgn(q) == 0)
        throw std::domain_error("log of zero");
    auto log_int = [](const mpz_class& z) {
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
    };
    return log_int(q.get_num()) - log_int(q.get_den());
}

std::size_t height(const BigRational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero())
        throw std::domain_error("GaussianRational division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const BigRational d = o.norm_sq();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0)
        return fcauchy::to_string(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = fcauchy::to_string(im_) + "i";
    if (sgn(re_) == 0)
        return im_part;
    if (sgn(im_) > 0)
        return fcauchy::to_string(re_) + "+" + im_part;
    return fcauchy::to_string(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

SqrtPiScaled operator/(const SqrtPiScaled& a, const SqrtPiScaled& b) {
    if (sgn(b.rational) == 0)
        throw std::domain_error("SqrtPiScaled division by zero");
    if (a.sqrt_pi_power < b.sqrt_pi_power)
        throw std::domain_error("SqrtPiScaled quotient would carry a negative power of pi");
    return {a.rational / b.rational, a.sqrt_pi_power - b.sqrt_pi_power};
}

double SqrtPiScaled::to_double() const {
    return rational.get_d() * std::pow(std::numbers::pi, 0.5 * sqrt_pi_power);
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

SqrtPiScaled radial_moment(unsigned m) {
    const unsigned k = m / 2;
    if (m % 2 == 1)
        return {make_rational(factorial(k), 2), 0};
    // (sqrt(pi)/2) * (2k)! / (k! 4^k)
    BigInt den = factorial(k) * 2;
    den <<= 2 * k;
    return {make_rational(factorial(2 * k), den), 1};
}

BigRational moment_ratio(unsigned m, unsigned k, unsigned j, unsigned n) {
    if (m == 0 || k == 0 || j == 0 || n == 0)
        throw std::domain_error("moment_ratio requires positive arguments");
    const unsigned jk = j * k;
    BigInt num = 1;
    for (unsigned t = 0; t < jk; ++t)
        num *= n + 2 * m + 2 * t;
    BigInt den = 1;
    den <<= jk;
    return make_rational(num, den);
}

BigRational moment_shift_ratio(unsigned a, unsigned t) {
    BigInt num = 1;
    for (unsigned i = 0; i < t; ++i)
        num *= a + 1 + 2 * i;
    BigInt den = 1;
    den <<= t;
    return make_rational(num, den);
}

}  // namespace fcauchy
