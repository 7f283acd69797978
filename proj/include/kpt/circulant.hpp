#pragma once

// r-circulant matrices
//
//   Circ_r(a_0, ..., a_{n-1}) = [ a_0       a_1       ...  a_{n-1} ]
//                               [ r a_{n-1} a_0       ...  a_{n-2} ]
//                               [   ...                            ]
//                               [ r a_1     r a_2     ...  a_0     ]
//
// Entry (i, j), 0-based: a_{j-i} if j >= i, otherwise r a_{n+j-i}.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kpt/dense_matrix.hpp"
#include "kpt/polynomial.hpp"
#include "kpt/sequence.hpp"

namespace kpt {

template <class T>
struct CirculantSpec {
    std::size_t n = 0;
    T r = T(0);
    std::vector<T> entries;
};

template <class T>
DenseMatrix<T> build(const CirculantSpec<T>& spec) {
    if (spec.n < 2) throw PreconditionError("r-circulant needs n >= 2");
    if (spec.entries.size() != spec.n)
        throw DimensionMismatch("generator has " + std::to_string(spec.entries.size()) +
                                " entries, expected " + std::to_string(spec.n));
    const std::size_t n = spec.n;
    DenseMatrix<T> m(n);
    std::vector<T> scaled(n);
    for (std::size_t l = 0; l < n; ++l) scaled[l] = spec.r * spec.entries[l];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = j >= i ? spec.entries[j - i] : scaled[n + j - i];
    return m;
}

/// Convenience overload: Circ_r(entries).
template <class T>
DenseMatrix<T> build(const T& r, std::vector<T> entries) {
    const std::size_t n = entries.size();
    return build(CirculantSpec<T>{n, r, std::move(entries)});
}

/// Generator (P(0), ..., P(n-1)) converted to T.
template <class T>
std::vector<T> pell_generator(unsigned k, std::size_t n) {
    const SequenceCache seq(k, std::max<std::size_t>(n, 2));
    std::vector<T> a;
    a.reserve(n);
    for (std::size_t j = 0; j < n; ++j) a.push_back(from_bigint<T>(seq[j]));
    return a;
}

/// P_n = Circ_r(P(0), ..., P(n-1)).
template <class T>
DenseMatrix<T> build_pell(unsigned k, std::size_t n, const T& r) {
    require_k(k);
    if (n < 2) throw PreconditionError("build_pell needs n >= 2");
    return build(CirculantSpec<T>{n, r, pell_generator<T>(k, n)});
}

/// psi(x) = 1 - 2k x - k x^2 - x^3.
inline Polynomial<BigInt> psi_polynomial(unsigned k) {
    return Polynomial<BigInt>({BigInt(1), BigInt(-2 * static_cast<long>(k)),
                               BigInt(-static_cast<long>(k)), BigInt(-1)});
}

/// Psi(x) = sum_{j<n} P(j) x^j.
inline Polynomial<BigInt> pell_generating_polynomial(unsigned k, std::size_t n) {
    const SequenceCache seq(k, std::max<std::size_t>(n, 2));
    return Polynomial<BigInt>(std::vector<BigInt>(seq.terms().begin(), seq.terms().begin() + n));
}

/// psi(x) * Psi(x), computed by full polynomial multiplication.
inline Polynomial<BigInt> psi_times_Psi(unsigned k, std::size_t n) {
    require_k(k);
    if (n < 3) throw PreconditionError("psi_times_Psi needs n >= 3");
    return psi_polynomial(k) * pell_generating_polynomial(k, n);
}

/// Boundary-term form x - P(n) x^n - (k P(n-1) + P(n-2)) x^(n+1) - P(n-1) x^(n+2).
inline Polynomial<BigInt> psi_times_Psi_boundary(unsigned k, std::size_t n) {
    require_k(k);
    if (n < 3) throw PreconditionError("psi_times_Psi_boundary needs n >= 3");
    const SequenceCache seq(k, n);
    std::vector<BigInt> c(n + 3, BigInt(0));
    c[1] = 1;
    c[n] = -seq[n];
    c[n + 1] = -(BigInt(k) * seq[n - 1] + seq[n - 2]);
    c[n + 2] = -seq[n - 1];
    return Polynomial<BigInt>(std::move(c));
}

/// Reduce a polynomial modulo x^n - r into a length-n generator.
inline std::vector<Rational> reduce_mod_shift(const Polynomial<BigInt>& p, std::size_t n,
                                              const Rational& r) {
    std::vector<Rational> g(n, Rational(0));
    Rational scale = 1;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0 && i % n == 0) scale *= r;
        g[i % n] += scale * Rational(c[i]);
    }
    return g;
}

/// Checks Circ_r(psi) * P_n == Circ_r(-r P(n), 1 - r(k P(n-1) + P(n-2)), -r P(n-1), 0, ...)
/// by exact matrix multiplication. For n >= 4 the left generator is
/// (1, -2k, -k, -1, 0, ..., 0); for n = 3 it is psi reduced mod x^3 - r.
inline bool shift_identity_check(unsigned k, std::size_t n, const Rational& r) {
    require_k(k);
    if (n < 3) throw PreconditionError("shift_identity_check needs n >= 3");
    const SequenceCache seq(k, n);
    const Rational kk = k;

    const DenseMatrix<Rational> left = build(r, reduce_mod_shift(psi_polynomial(k), n, r));
    const DenseMatrix<Rational> pn = build_pell<Rational>(k, n, r);

    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = -r * Rational(seq[n]);
    rhs[1] = 1 - r * (kk * Rational(seq[n - 1]) + Rational(seq[n - 2]));
    rhs[2] = -r * Rational(seq[n - 1]);
    return multiply(left, pn) == build(r, std::move(rhs));
}

namespace detail {

/// Fraction-free (Bareiss) elimination on an integer matrix, in place.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace detail

inline BigInt det_exact(const DenseMatrix<BigInt>& m) {
    std::vector<std::vector<BigInt>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
    return detail::bareiss_determinant(std::move(a));
}

/// Exact determinant of a rational matrix: each row is cleared of
/// denominators, Bareiss runs on the integer matrix, and the row scales are
/// divided back out.
inline Rational det_exact(const DenseMatrix<Rational>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) l = mp::lcm(l, mp::denominator(m(i, j)));
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = mp::numerator(m(i, j)) * (l / mp::denominator(m(i, j)));
        scale *= l;
    }
    return Rational(detail::bareiss_determinant(std::move(a)), scale);
}

} // namespace kpt
