#pragma once

// Number tower shared by every module:
//   BigInt   - exact integers (GMP)
//   Rational - exact rationals (GMP)
//   Real     - runtime-precision binary floating point (MPFR)
//   Complex  - std::complex over Real
// Precision is requested in bits and applied through PrecisionScope.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <charconv>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

#include "kpt/error.hpp"

namespace kpt {

namespace mp = boost::multiprecision;

using BigInt = mp::mpz_int;
using Rational = mp::mpq_rational;
using Real = mp::mpfr_float;
using Complex = std::complex<Real>;
using cdouble = std::complex<double>;

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kMaxPrecisionBits = 4096;
inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Decimal digits that give at least `bits` binary digits of mantissa.
inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the default MPFR precision for the lifetime of the scope and
/// restores the previous value on exit. Every Real created inside the
/// scope (including temporaries) carries the requested precision.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
        if (bits < kMinPrecisionBits)
            throw PreconditionError("precision_bits must be >= " +
                                    std::to_string(kMinPrecisionBits));
        Real::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// 2^(-bits/divisor): the tolerance scale used throughout.
inline Real tolerance(unsigned bits, unsigned divisor) {
    return mp::ldexp(Real(1), -static_cast<int>(bits / divisor));
}

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const BigInt& v) { return Real(v); }
inline Real to_real(const Rational& v) { return Real(v); }

inline Complex to_complex(const Rational& v) { return Complex(Real(v), Real(0)); }

inline Real cabs(const Complex& z) { return mp::hypot(z.real(), z.imag()); }
inline Real carg(const Complex& z) { return mp::atan2(z.imag(), z.real()); }
inline Real cnorm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline Complex cpolar(const Real& magnitude, const Real& angle) {
    return Complex(magnitude * mp::cos(angle), magnitude * mp::sin(angle));
}

/// z^e by binary powering (exact exponent, no log/exp round trip).
inline Complex cpow(Complex base, std::uint64_t e) {
    Complex result(Real(1), Real(0));
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

inline Real rpow(Real base, std::uint64_t e) {
    Real result = 1;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

/// Principal n-th root: |z|^(1/n) * exp(i*arg(z)/n) with arg in (-pi, pi].
inline Complex principal_root(const Complex& z, std::size_t n) {
    const Real mag = cabs(z);
    if (mag == 0) return Complex(Real(0), Real(0));
    return cpolar(mp::pow(mag, Real(1) / Real(n)), carg(z) / Real(n));
}

/// e^(2*pi*i*m/n)
inline Complex unit_root(std::size_t n, std::size_t m) {
    return cpolar(Real(1), Real(2) * pi() * Real(m % n) / Real(n));
}

/// Relative distance |a-b| / max(1, |b|).
inline Real rel_diff(const Complex& a, const Complex& b) {
    Real scale = cabs(b);
    if (scale < 1) scale = 1;
    return cabs(a - b) / scale;
}

/// Relative distance |a-b| / |b| (falls back to |a-b| when b == 0).
inline Real rel_err(const Complex& a, const Complex& b) {
    const Real scale = cabs(b);
    if (scale == 0) return cabs(a);
    return cabs(a - b) / scale;
}

/// Scientific rendering with `digits` significant digits. MPFR formats
/// with '.' regardless of the global locale.
inline std::string to_string(const Real& v, int digits) {
    return v.str(digits, std::ios_base::scientific);
}

/// Fixed-point rendering of a double with `digits` decimals; '.' separator
/// independent of locale.
inline std::string fixed(double v, int digits) {
    char buf[128];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

/// Shortest round-trip rendering of a double.
inline std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace kpt
