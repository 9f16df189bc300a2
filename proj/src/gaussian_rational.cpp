#include "wsc/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "wsc/errors.hpp"

namespace wsc {

bool GaussianRational::is_integral() const {
    return im_ == 0 && denominator(re_) == 1;
}

Integer GaussianRational::to_integer() const {
    if (!is_integral()) throw DomainError("value " + to_string() + " is not an integer");
    return numerator(re_);
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
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
    if (im_ == 0 && o.im_ == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.im_ == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm_sq();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

std::string GaussianRational::to_string() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string out = rational_to_string(re_);
    if (im_ >= 0) out += '+';
    out += rational_to_string(im_);
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_signed_digits(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!is_signed_digits(num)) throw InputError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) return Rational(n);
    const std::string_view den = s.substr(slash + 1);
    if (den.empty() || den.front() == '+' || den.front() == '-' || !is_signed_digits(den))
        throw InputError("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

GaussianRational GaussianRational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw InputError("empty value");
    if (s.back() != 'i') return GaussianRational(parse_rational(s));

    const std::string_view body = s.substr(0, s.size() - 1);
    // The split point is the last sign that is not in leading position.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view t) -> Rational {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };
    if (split == std::string_view::npos) return {Rational(0), imag_part(body)};
    return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = boost::multiprecision::gcd(a, b);
    return boost::multiprecision::abs(a / g * b);
}

}  // namespace wsc
