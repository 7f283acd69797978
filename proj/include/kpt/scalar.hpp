#pragma once

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <variant>

#include "kpt/numeric.hpp"

namespace kpt {

// Elementwise helpers so matrix/polynomial templates can stay generic over
// Rational, BigInt, double, std::complex<double> and Complex.

inline Rational conj_of(const Rational& x) { return x; }
inline BigInt conj_of(const BigInt& x) { return x; }
inline double conj_of(double x) { return x; }
inline cdouble conj_of(const cdouble& x) { return std::conj(x); }
inline Complex conj_of(const Complex& x) { return Complex(x.real(), -x.imag()); }

inline Rational abs2_of(const Rational& x) { return x * x; }
inline BigInt abs2_of(const BigInt& x) { return x * x; }
inline double abs2_of(double x) { return x * x; }
inline double abs2_of(const cdouble& x) { return std::norm(x); }
inline Real abs2_of(const Complex& x) { return cnorm(x); }

inline Rational abs_of(const Rational& x) { return mp::abs(x); }
inline BigInt abs_of(const BigInt& x) { return mp::abs(x); }
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const cdouble& x) { return std::abs(x); }
inline Real abs_of(const Complex& x) { return cabs(x); }

inline bool is_zero_of(const Rational& x) { return x == 0; }
inline bool is_zero_of(const BigInt& x) { return x == 0; }
inline bool is_zero_of(double x) { return x == 0.0; }
inline bool is_zero_of(const cdouble& x) { return x == cdouble(0.0, 0.0); }
inline bool is_zero_of(const Complex& x) { return x.real() == 0 && x.imag() == 0; }

/// Conversion of an exact integer into any supported element type.
template <class T>
T from_bigint(const BigInt& v);
template <>
inline BigInt from_bigint<BigInt>(const BigInt& v) { return v; }
template <>
inline Rational from_bigint<Rational>(const BigInt& v) { return Rational(v); }
template <>
inline double from_bigint<double>(const BigInt& v) { return v.convert_to<double>(); }
template <>
inline cdouble from_bigint<cdouble>(const BigInt& v) { return {v.convert_to<double>(), 0.0}; }
template <>
inline Complex from_bigint<Complex>(const BigInt& v) { return Complex(Real(v), Real(0)); }

inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline cdouble to_cdouble(const Complex& z) { return {to_double(z.real()), to_double(z.imag())}; }

/// Two-level scalar: an exact rational, or a complex number at a stated
/// precision. Arithmetic stays exact when both operands are exact; mixing
/// promotes the rational to the complex operand's precision.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Complex& v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(long v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }

    const Rational& exact() const {
        if (!is_exact()) throw PreconditionError("scalar is not an exact rational");
        return std::get<Rational>(value_);
    }

    Complex to_complex(unsigned precision_bits) const {
        if (is_exact()) {
            PrecisionScope scope(precision_bits);
            return kpt::to_complex(std::get<Rational>(value_));
        }
        return std::get<Complex>(value_);
    }

    cdouble to_cdouble() const {
        if (is_exact()) return {std::get<Rational>(value_).convert_to<double>(), 0.0};
        return kpt::to_cdouble(std::get<Complex>(value_));
    }

    bool is_zero() const {
        return std::visit([](const auto& v) { return is_zero_of(v); }, value_);
    }

    bool is_real() const { return is_exact() || std::get<Complex>(value_).imag() == 0; }

    /// |r| when it is exactly representable (r rational).
    std::optional<Rational> abs_exact() const {
        if (is_exact()) return mp::abs(std::get<Rational>(value_));
        return std::nullopt;
    }

    /// |r|^2 when it is exactly representable (r rational).
    std::optional<Rational> abs2_exact() const {
        if (is_exact()) return abs2_of(std::get<Rational>(value_));
        return std::nullopt;
    }

    Real abs(unsigned precision_bits) const {
        PrecisionScope scope(precision_bits);
        return cabs(to_complex(precision_bits));
    }

    /// Real part at precision; meaningful when is_real().
    Real real(unsigned precision_bits) const {
        PrecisionScope scope(precision_bits);
        return to_complex(precision_bits).real();
    }

    const std::variant<Rational, Complex>& value() const { return value_; }

    std::string to_string(int digits = 20) const {
        if (is_exact()) return std::get<Rational>(value_).str();
        const Complex& z = std::get<Complex>(value_);
        if (z.imag() == 0) return kpt::to_string(z.real(), digits);
        std::string im = kpt::to_string(mp::abs(z.imag()), digits);
        return kpt::to_string(z.real(), digits) + (z.imag() < 0 ? "-" : "+") + im + "i";
    }

    /// Grammar:
    ///   [-]int[/int]            exact rational
    ///   decimal literal          float at `precision_bits` (e.g. 1.08, 2e-3)
    ///   a+bi, a-bi, bi, i, -i    complex at `precision_bits`
    static Scalar parse(std::string_view text, unsigned precision_bits);

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw PreconditionError("division by zero scalar");
        return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
    }

private:
    template <class Op>
    static Scalar combine(const Scalar& a, const Scalar& b, Op op) {
        if (a.is_exact() && b.is_exact())
            return Scalar(Rational(op(std::get<Rational>(a.value_), std::get<Rational>(b.value_))));
        const unsigned digits = std::max(a.is_exact() ? 0U : std::get<Complex>(a.value_).real().precision(),
                                         b.is_exact() ? 0U : std::get<Complex>(b.value_).real().precision());
        struct DigitsGuard {
            unsigned saved = Real::default_precision();
            explicit DigitsGuard(unsigned d) { Real::default_precision(d); }
            ~DigitsGuard() { Real::default_precision(saved); }
        } guard(digits);
        const Complex x = a.is_exact() ? kpt::to_complex(std::get<Rational>(a.value_)) : std::get<Complex>(a.value_);
        const Complex y = b.is_exact() ? kpt::to_complex(std::get<Rational>(b.value_)) : std::get<Complex>(b.value_);
        return Scalar(Complex(op(x, y)));
    }

    std::variant<Rational, Complex> value_;
};

namespace detail {

inline std::optional<Rational> parse_rational(const std::string& s) {
    static const std::regex re(R"(^([+-]?\d+)(?:/(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) return std::nullopt;
    const BigInt num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

inline bool is_decimal(const std::string& s) {
    static const std::regex re(R"(^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$)");
    return std::regex_match(s, re);
}

/// Real-valued component: rational or decimal literal.
inline Real parse_component(const std::string& s) {
    if (auto q = parse_rational(s)) return Real(*q);
    if (is_decimal(s)) return Real(s[0] == '+' ? s.substr(1) : s);
    throw ParseError("malformed number '" + s + "'");
}

} // namespace detail

inline Scalar Scalar::parse(std::string_view text, unsigned precision_bits) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    if (auto q = detail::parse_rational(s)) return Scalar(*q);

    PrecisionScope scope(precision_bits);
    if (detail::is_decimal(s)) return Scalar(Complex(detail::parse_component(s), Real(0)));

    if (s.back() != 'i') throw ParseError("malformed scalar '" + std::string(text) + "'");
    s.pop_back();
    // Split at the last sign that is not the leading one nor part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    const Real re = re_part.empty() ? Real(0) : detail::parse_component(re_part);
    const Real im = detail::parse_component(im_part);
    return Scalar(Complex(re, im));
}

} // namespace kpt
