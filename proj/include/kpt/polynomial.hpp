#pragma once

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "kpt/scalar.hpp"

namespace kpt {

/// Dense univariate polynomial, coefficients in ascending degree. The
/// trailing coefficient is nonzero unless the polynomial is zero (empty).
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

    /// x^degree * lead
    static Polynomial monomial(std::size_t degree, const T& lead) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = lead;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }

    /// Coefficient of x^i (zero beyond the degree).
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    template <class U>
    U evaluate(const U& x) const {
        U acc = U(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + from_coefficient<U>(c_[i]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_of(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    template <class U>
    static U from_coefficient(const T& v) {
        if constexpr (std::is_same_v<U, Complex> && std::is_same_v<T, Rational>)
            return kpt::to_complex(v);
        else if constexpr (std::is_same_v<U, Complex> && std::is_same_v<T, BigInt>)
            return Complex(Real(v), Real(0));
        else
            return U(v);
    }

    void trim() {
        while (!c_.empty() && is_zero_of(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Quotient and remainder of a / b over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<T> rem = a.coefficients();
    const long db = b.degree();
    if (a.degree() < db) return {Polynomial<T>(), a};
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    for (long i = a.degree(); i >= db; --i) {
        const T& top = rem[static_cast<std::size_t>(i)];
        if (is_zero_of(top)) continue;
        const T f = top / b.lead();
        quot[static_cast<std::size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Monic greatest common divisor over a field (zero if both are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    std::vector<T> c = a.coefficients();
    const T lead = c.back();
    for (T& v : c) v /= lead;
    return Polynomial<T>(std::move(c));
}

} // namespace kpt
