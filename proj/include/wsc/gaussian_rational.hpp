#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace wsc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exact complex number re + im·i with rational parts.
///
/// GMP keeps both parts in lowest terms with positive denominators, so
/// structural equality is value equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}  // NOLINT: implicit by intent
    GaussianRational(Integer re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /// Zero imaginary part and unit denominator.
    bool is_integral() const;
    /// Integer value; throws DomainError unless integral().
    Integer to_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|², always a non-negative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    /// Throws DomainError on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text: "3", "-3/2", "1/2+3i", "0-1i".
    std::string to_string() const;

    /// Parses `INT`, `INT/INT`, `a+bi`, `a-bi`, or `bi` (a, b rational).
    /// Decimal points and exponents are rejected with InputError.
    static GaussianRational parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses a rational `INT` or `INT/INT`; InputError otherwise.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace wsc
