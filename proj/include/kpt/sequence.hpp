#pragma once

// Generalized k-Pell-Tribonacci numbers
//
//   P(0) = 0, P(1) = 1, P(2) = 2k,
//   P(n) = 2k P(n-1) + k P(n-2) + P(n-3)          (n >= 3)
//
// with characteristic polynomial phi(x) = x^3 - 2k x^2 - k x - 1, its roots
// (alpha dominant real, beta, gamma) and the Binet representation.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpt/numeric.hpp"

namespace kpt {

inline void require_k(unsigned k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
}

/// Exact terms P(0..max_index) for a single k. Grows on demand; a const
/// cache is an immutable snapshot and may be read from many threads.
class SequenceCache {
public:
    explicit SequenceCache(unsigned k, std::size_t max_index = 2) : k_(k) {
        require_k(k);
        terms_ = {BigInt(0), BigInt(1), BigInt(2 * k)};
        grow_to(max_index);
    }

    unsigned k() const noexcept { return k_; }
    std::size_t max_index() const noexcept { return terms_.size() - 1; }
    std::span<const BigInt> terms() const noexcept { return terms_; }

    const BigInt& operator[](std::size_t n) const {
        if (n > max_index())
            throw std::out_of_range("SequenceCache: index " + std::to_string(n) +
                                    " beyond cached range " + std::to_string(max_index()));
        return terms_[n];
    }

    void grow_to(std::size_t max_index) {
        if (max_index + 1 <= terms_.size()) return;
        terms_.reserve(max_index + 1);
        const BigInt two_k = 2 * k_;
        const BigInt k = k_;
        for (std::size_t n = terms_.size(); n <= max_index; ++n)
            terms_.push_back(two_k * terms_[n - 1] + k * terms_[n - 2] + terms_[n - 3]);
    }

private:
    unsigned k_;
    std::vector<BigInt> terms_;
};

/// Cache holding P(0..N).
inline SequenceCache terms_upto(unsigned k, std::size_t N) {
    if (N < 2) throw PreconditionError("terms_upto needs N >= 2");
    return SequenceCache(k, N);
}

namespace detail {

class TermMemo {
public:
    BigInt get(unsigned k, std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = caches_.try_emplace(k, k);
        SequenceCache& cache = it->second;
        if (cache.max_index() < n) cache.grow_to(std::max(n, 2 * cache.max_index()));
        return cache[n];
    }

private:
    std::mutex mutex_;
    std::map<unsigned, SequenceCache> caches_;
};

inline TermMemo& term_memo() {
    static TermMemo memo;
    return memo;
}

} // namespace detail

/// P(n) for parameter k, exact. Backed by a process-wide per-k memo.
inline BigInt term(unsigned k, std::size_t n) {
    require_k(k);
    return detail::term_memo().get(k, n);
}

/// phi(x) = x^3 - 2k x^2 - k x - 1 evaluated exactly.
inline Rational phi(unsigned k, const Rational& x) {
    const Rational kk = k;
    return ((x - 2 * kk) * x - kk) * x - 1;
}

/// Intermediate quantities of the depressed-cubic reduction x = y + 2k/3,
/// y^3 + p y + q = 0. p, q and the discriminant are exact; u, v and the
/// three roots are complex at the requested precision.
struct CardanoWork {
    Rational p;
    Rational q;
    Rational delta;  // (q/2)^2 + (p/3)^3
    Complex u;
    Complex v;
    Complex omega3;  // e^(2 pi i / 3)
    std::array<Complex, 3> roots;  // x1 = 2k/3 + u + v, x2, x3
};

/// Exact closed form of the discriminant, used to cross-check `delta`.
inline Rational cardano_discriminant_closed(unsigned k) {
    const BigInt kk = k;
    return Rational(-4 * kk * kk * kk * kk + 28 * kk * kk * kk + 36 * kk * kk + 27, 108);
}

inline CardanoWork cardano(unsigned k, unsigned precision_bits) {
    require_k(k);
    PrecisionScope scope(precision_bits);
    CardanoWork w;
    const Rational kk = k;
    w.p = -(4 * kk * kk + 3 * kk) / 3;
    w.q = -(16 * kk * kk * kk + 18 * kk * kk + 27) / 27;
    w.delta = (w.q / 2) * (w.q / 2) + (w.p / 3) * (w.p / 3) * (w.p / 3);

    const Real delta = to_real(w.delta);
    const Complex sqrt_delta =
        delta >= 0 ? Complex(mp::sqrt(delta), Real(0)) : Complex(Real(0), mp::sqrt(-delta));
    const Complex half_q = to_complex(w.q / 2);

    // u is the principal cube root (real when delta > 0 since -q/2 > 0);
    // v is tied to u through u v = -p/3 so the pair stays consistent.
    w.u = principal_root(-half_q + sqrt_delta, 3);
    w.v = to_complex(-w.p / 3) / w.u;
    w.omega3 = unit_root(3, 1);
    const Complex omega3_sq = w.omega3 * w.omega3;
    const Complex shift = to_complex(2 * kk / 3);
    w.roots = {shift + (w.u + w.v), shift + w.omega3 * w.u + omega3_sq * w.v,
               shift + omega3_sq * w.u + w.omega3 * w.v};
    return w;
}

/// Roots of phi and Binet coefficients A, B, C (P(n) = A a^n + B b^n + C g^n).
struct CubicRoots {
    unsigned k = 1;
    unsigned precision_bits = 0;
    Real alpha;
    Complex beta;
    Complex gamma;
    Complex binet_A;
    Complex binet_B;
    Complex binet_C;
    /// Largest distance between a Newton/deflation root and its nearest
    /// Cardano counterpart.
    Real cardano_deviation;

    std::array<Complex, 3> roots() const {
        return {Complex(alpha, Real(0)), beta, gamma};
    }
};

namespace detail {

template <class T>
T phi_eval(unsigned k, const T& x) {
    const T kk = T(Real(k));
    return ((x - T(Real(2)) * kk) * x - kk) * x - T(Real(1));
}

template <class T>
T phi_prime(unsigned k, const T& x) {
    const T kk = T(Real(k));
    return (T(Real(3)) * x - T(Real(4)) * kk) * x - kk;
}

/// Magnitude scale |x|^3 + 2k|x|^2 + k|x| + 1 for relative residuals.
inline Real phi_scale(unsigned k, const Real& abs_x) {
    return ((abs_x + 2 * k) * abs_x + k) * abs_x + 1;
}

inline Complex newton_polish(unsigned k, Complex x, int steps) {
    for (int i = 0; i < steps; ++i) {
        const Complex d = phi_prime(k, x);
        if (cabs(d) == 0) break;
        x -= phi_eval(k, x) / d;
    }
    return x;
}

} // namespace detail

/// Relative residual |phi(x)| / (|x|^3 + 2k|x|^2 + k|x| + 1).
inline Real phi_relative_residual(unsigned k, const Complex& x) {
    return cabs(detail::phi_eval(k, x)) / detail::phi_scale(k, cabs(x));
}

/// Roots of phi at `precision_bits`.
///
/// alpha is bracketed on (2k, 2k+1) (phi(2k) < 0 < phi(2k+1)), refined by
/// bisection and then Newton; beta and gamma come from deflating to the
/// quadratic x^2 + (alpha-2k) x + (alpha(alpha-2k) - k) and a Newton polish.
/// The result is cross-checked against the Cardano formulas.
/// Throws PrecisionExhausted when either check misses 2^(-bits/2).
inline CubicRoots char_roots(unsigned k, unsigned precision_bits) {
    require_k(k);
    PrecisionScope scope(precision_bits);
    const Real tol = tolerance(precision_bits, 2);

    Real lo = 2 * k;
    Real hi = 2 * k + 1;
    for (int i = 0; i < 40; ++i) {
        const Real mid = (lo + hi) / 2;
        if (detail::phi_eval<Real>(k, mid) < 0) lo = mid; else hi = mid;
    }
    Real alpha = (lo + hi) / 2;
    const Real step_floor = mp::ldexp(Real(1), -static_cast<int>(precision_bits) + 4);
    const int max_newton = 16 + 2 * static_cast<int>(std::log2(precision_bits));
    for (int i = 0; i < max_newton; ++i) {
        const Real step = detail::phi_eval<Real>(k, alpha) / detail::phi_prime<Real>(k, alpha);
        alpha -= step;
        if (mp::abs(step) <= step_floor * alpha) break;
    }
    if (!(alpha > 2 * k && alpha < 2 * k + 1))
        throw PrecisionExhausted("dominant root left the (2k, 2k+1) bracket");

    const Real b1 = alpha - 2 * k;
    const Real b0 = alpha * b1 - k;
    const Real disc = b1 * b1 - 4 * b0;
    Complex beta, gamma;
    if (disc < 0) {
        const Real s = mp::sqrt(-disc);
        beta = Complex(-b1 / 2, s / 2);
        gamma = Complex(-b1 / 2, -s / 2);
    } else {
        const Real s = mp::sqrt(disc);
        beta = Complex((-b1 - s) / 2, Real(0));
        gamma = Complex((-b1 + s) / 2, Real(0));
    }
    beta = detail::newton_polish(k, beta, 3);
    gamma = detail::newton_polish(k, gamma, 3);

    CubicRoots out;
    out.k = k;
    out.precision_bits = precision_bits;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = gamma;

    for (const Complex& root : out.roots())
        if (phi_relative_residual(k, root) > tol)
            throw PrecisionExhausted("phi residual above 2^(-bits/2) at k=" + std::to_string(k));

    const CardanoWork cw = cardano(k, precision_bits);
    Real worst = 0;
    for (const Complex& root : out.roots()) {
        Real best = -1;
        for (const Complex& c : cw.roots) {
            const Real d = cabs(root - c);
            if (best < 0 || d < best) best = d;
        }
        best /= std::max(Real(1), cabs(root));
        if (best > worst) worst = best;
    }
    out.cardano_deviation = worst;
    if (worst > tol)
        throw PrecisionExhausted("Cardano cross-check disagrees with Newton roots at k=" +
                                 std::to_string(k));

    const Complex a(alpha, Real(0));
    out.binet_A = a / ((a - beta) * (a - gamma));
    out.binet_B = beta / ((beta - a) * (beta - gamma));
    out.binet_C = gamma / ((gamma - a) * (gamma - beta));
    return out;
}

/// Binet evaluation A a^n + B b^n + C g^n (equivalently
/// a^(n+1)/((a-b)(a-g)) + ...) using precomputed roots.
inline Real binet_term(const CubicRoots& roots, std::size_t n) {
    PrecisionScope scope(roots.precision_bits);
    const Complex a(roots.alpha, Real(0));
    const Complex value = roots.binet_A * cpow(a, n) + roots.binet_B * cpow(roots.beta, n) +
                          roots.binet_C * cpow(roots.gamma, n);
    return value.real();
}

inline Real binet_term(unsigned k, std::size_t n, unsigned precision_bits) {
    return binet_term(char_roots(k, precision_bits), n);
}

} // namespace kpt
