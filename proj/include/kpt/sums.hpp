#pragma once

// Closed forms for
//   S1(n) = sum_{i<=n} P(i)        W1(n) = sum_{i<=n} i P(i)
//   S2(n) = sum_{i<=n} P(i)^2      W2(n) = sum_{i<=n} i P(i)^2
// in exact rational arithmetic, each paired with a direct-summation oracle.

#include <cstddef>

#include "kpt/sequence.hpp"

namespace kpt {

namespace detail {

/// Boundary terms P(n+1), P(n+2), P(n+3) as rationals.
struct Tail {
    Rational p1, p2, p3;
};

inline Tail tail(const SequenceCache& seq, std::size_t n) {
    return {Rational(seq[n + 1]), Rational(seq[n + 2]), Rational(seq[n + 3])};
}

inline SequenceCache cache_for(unsigned k, std::size_t n) { return SequenceCache(k, n + 3); }

} // namespace detail

/// S1(n) = (P(n+3) + (1-2k) P(n+2) + (1-3k) P(n+1) - 1) / (3k).
/// `seq` must hold indices up to n+3.
inline Rational s1_closed(const SequenceCache& seq, std::size_t n) {
    const Rational k = seq.k();
    const auto [p1, p2, p3] = detail::tail(seq, n);
    return (p3 + (1 - 2 * k) * p2 + (1 - 3 * k) * p1 - 1) / (3 * k);
}

/// W1(n) = ((a1 n + a2) P(n+3) + (b1 n + b2) P(n+2) + (c1 n + c2) P(n+1) + d) / (9k^2).
inline Rational w1_closed(const SequenceCache& seq, std::size_t n) {
    const Rational k = seq.k();
    const Rational nn = static_cast<unsigned long>(n);
    const auto [p1, p2, p3] = detail::tail(seq, n);
    const Rational a1 = 3 * k, a2 = 5 * k - 3;
    const Rational b1 = 3 * k - 6 * k * k, b2 = -10 * k * k + 8 * k - 3;
    const Rational c1 = 3 * k - 9 * k * k, c2 = -9 * k * k + 8 * k - 3;
    const Rational d = k + 3;
    return ((a1 * nn + a2) * p3 + (b1 * nn + b2) * p2 + (c1 * nn + c2) * p1 + d) / (9 * k * k);
}

/// S2(n): two fractions over -3k(k+2) and 3k(k+2).
inline Rational s2_closed(const SequenceCache& seq, std::size_t n) {
    const Rational k = seq.k();
    const auto [p1, p2, p3] = detail::tail(seq, n);
    const Rational a1 = 1, a2 = 4 * k * k + 4 * k + 1, a3 = 3 * k * k + 6 * k + 1;
    const Rational b1 = 2 * k - 2, b2 = -4 * k - 2, b3 = -2;
    const Rational c1 = -1;
    const Rational den = 3 * k * (k + 2);
    const Rational squares = a1 * p3 * p3 + a2 * p2 * p2 + a3 * p1 * p1;
    const Rational cross = b1 * p1 * p2 + b2 * p2 * p3 + b3 * p1 * p3 + c1;
    return squares / (-den) - cross / den;
}

/// W2(n): one fraction over 9k^2(k+2)^2 with coefficients linear in n.
inline Rational w2_closed(const SequenceCache& seq, std::size_t n) {
    const Rational k = seq.k();
    const Rational nn = static_cast<unsigned long>(n);
    const auto [p1, p2, p3] = detail::tail(seq, n);
    const Rational k2 = k * k, k3 = k2 * k, k4 = k3 * k;
    const Rational lead = 3 * k * (k + 2);

    const Rational a1 = -lead * nn - (7 * k2 + 14 * k + 9);
    const Rational a2 =
        -lead * (2 * k + 1) * (2 * k + 1) * nn - (28 * k4 + 72 * k3 + 60 * k2 + 20 * k + 9);
    const Rational a3 =
        -lead * (3 * k2 + 6 * k + 1) * nn - (9 * k4 + 36 * k3 + 46 * k2 + 20 * k + 9);
    const Rational b1 = -2 * lead * (k - 1) * nn - (20 * k3 + 20 * k2 - 16 * k - 6);
    const Rational b2 = 2 * lead * (2 * k + 1) * nn + (28 * k3 + 64 * k2 + 46 * k + 6);
    const Rational b3 = 2 * lead * nn + (14 * k2 + 22 * k + 6);
    const Rational c1 = k2 + 2 * k + 9;

    const Rational num = a1 * p3 * p3 + a2 * p2 * p2 + a3 * p1 * p1 + b1 * p1 * p2 +
                         b2 * p2 * p3 + b3 * p1 * p3 + c1;
    return num / (9 * k2 * (k + 2) * (k + 2));
}

inline Rational s1_closed(unsigned k, std::size_t n) { return s1_closed(detail::cache_for(k, n), n); }
inline Rational w1_closed(unsigned k, std::size_t n) { return w1_closed(detail::cache_for(k, n), n); }
inline Rational s2_closed(unsigned k, std::size_t n) { return s2_closed(detail::cache_for(k, n), n); }
inline Rational w2_closed(unsigned k, std::size_t n) { return w2_closed(detail::cache_for(k, n), n); }

// Direct summation oracles. `seq` must hold indices up to n.

inline BigInt s1_direct(const SequenceCache& seq, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += seq[i];
    return acc;
}

inline BigInt w1_direct(const SequenceCache& seq, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += BigInt(static_cast<unsigned long>(i)) * seq[i];
    return acc;
}

inline BigInt s2_direct(const SequenceCache& seq, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += seq[i] * seq[i];
    return acc;
}

inline BigInt w2_direct(const SequenceCache& seq, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i)
        acc += BigInt(static_cast<unsigned long>(i)) * seq[i] * seq[i];
    return acc;
}

inline BigInt s1_direct(unsigned k, std::size_t n) { return s1_direct(SequenceCache(k, n), n); }
inline BigInt w1_direct(unsigned k, std::size_t n) { return w1_direct(SequenceCache(k, n), n); }
inline BigInt s2_direct(unsigned k, std::size_t n) { return s2_direct(SequenceCache(k, n), n); }
inline BigInt w2_direct(unsigned k, std::size_t n) { return w2_direct(SequenceCache(k, n), n); }

struct SumsReport {
    unsigned k = 1;
    std::size_t n = 0;
    Rational s1, w1, s2, w2;
};

/// All four closed forms for (k, n).
inline SumsReport sums_report(unsigned k, std::size_t n) {
    const SequenceCache seq = detail::cache_for(k, n);
    return {k, n, s1_closed(seq, n), w1_closed(seq, n), s2_closed(seq, n), w2_closed(seq, n)};
}

} // namespace kpt
