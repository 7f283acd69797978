#pragma once

// Invertibility of r-circulant matrices: the polynomial gcd criterion,
// the sufficient conditions for real r, and a scan of the excluded values
// r* = +-(P(n)/P(n-1))^(n/2).

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kpt/spectral.hpp"

namespace kpt {

enum class InvertibilityStatus { GuaranteedInvertible, ExcludedParameter, SingularDetected, Undetermined };

inline const char* to_string(InvertibilityStatus s) {
    switch (s) {
        case InvertibilityStatus::GuaranteedInvertible: return "guaranteed_invertible";
        case InvertibilityStatus::ExcludedParameter: return "excluded_parameter";
        case InvertibilityStatus::SingularDetected: return "singular_detected";
        case InvertibilityStatus::Undetermined: return "undetermined";
    }
    return "unknown";
}

struct InvertibilityWitness {
    /// Eigenvalue index and |lambda_m|, when the evidence is spectral.
    std::optional<std::size_t> m;
    std::optional<Real> magnitude;
    /// Common factor of Psi_a(x) and x^n - r, when the evidence is algebraic.
    std::optional<Polynomial<Rational>> gcd_factor;
};

struct InvertibilityVerdict {
    InvertibilityStatus status = InvertibilityStatus::Undetermined;
    std::string reason;
    std::optional<InvertibilityWitness> witness;
};

/// Monic gcd of Psi_a(x) and x^n - r over the rationals.
inline Polynomial<Rational> circulant_gcd(const std::vector<Rational>& a, const Rational& r,
                                          std::size_t n) {
    if (r == 0) throw ZeroR();
    if (a.size() != n)
        throw DimensionMismatch("generator has " + std::to_string(a.size()) +
                                " entries, expected " + std::to_string(n));
    std::vector<Rational> shift(n + 1, Rational(0));
    shift[0] = -r;
    shift[n] = 1;
    return gcd(Polynomial<Rational>(a), Polynomial<Rational>(std::move(shift)));
}

/// Circ_r(a) is invertible iff gcd(Psi_a(x), x^n - r) = 1.
inline bool gcd_criterion(const std::vector<Rational>& a, const Rational& r, std::size_t n) {
    return circulant_gcd(a, r, n).degree() == 0;
}

/// Same criterion, returned as a verdict carrying the common factor.
inline InvertibilityVerdict gcd_verdict(const std::vector<Rational>& a, const Rational& r,
                                        std::size_t n) {
    const Polynomial<Rational> g = circulant_gcd(a, r, n);
    if (g.degree() == 0) return {InvertibilityStatus::GuaranteedInvertible, "gcd(Psi_a, x^n - r) = 1", {}};
    InvertibilityWitness w;
    w.gcd_factor = g;
    return {InvertibilityStatus::SingularDetected,
            "Psi_a and x^n - r share a factor of degree " + std::to_string(g.degree()), w};
}

/// (P(n)/P(n-1))^(n/2), the value excluded by both real-r theorems.
inline Real excluded_magnitude(unsigned k, std::size_t n) {
    const SequenceCache seq(k, n);
    const Real ratio = Real(seq[n]) / Real(seq[n - 1]);
    return rpow(mp::sqrt(ratio), n);
}

/// Sufficient conditions for real r:
///   r > 0: invertible unless r in {1/alpha, (P(n)/P(n-1))^(n/2)};
///   r < 0: invertible unless r = -(P(n)/P(n-1))^(n/2).
/// For r > 0 the value alpha^(-n), where rho_0 = 1/alpha and the generic
/// eigenvalue formula degenerates, is excluded as well. Membership is
/// decided with a relative band of 2^(-bits/2).
inline InvertibilityVerdict sufficient_condition(unsigned k, std::size_t n, const Scalar& r,
                                                 unsigned bits) {
    require_k(k);
    detail::require_n(n, 2, "sufficient_condition");
    if (r.is_zero()) throw ZeroR();
    if (!r.is_real()) throw PreconditionError("sufficient_condition needs real r");
    PrecisionScope scope(bits);
    const Real rv = r.real(bits);
    const Real band = tolerance(bits, 2);
    const auto near = [&](const Real& e) {
        return mp::abs(rv - e) <= band * std::max(Real(1), Real(mp::abs(e)));
    };
    const Real star = excluded_magnitude(k, n);

    if (rv > 0) {
        const Real alpha = char_roots(k, bits).alpha;
        if (near(Real(1) / alpha))
            return {InvertibilityStatus::ExcludedParameter, "r = 1/alpha", {}};
        if (near(star))
            return {InvertibilityStatus::ExcludedParameter, "r = (P(n)/P(n-1))^(n/2)", {}};
        if (near(Real(1) / rpow(alpha, n)))
            return {InvertibilityStatus::ExcludedParameter,
                    "r = alpha^(-n): rho_0 = 1/alpha (conservative exclusion)", {}};
        return {InvertibilityStatus::GuaranteedInvertible,
                "r > 0 avoids {1/alpha, (P(n)/P(n-1))^(n/2), alpha^(-n)}", {}};
    }
    if (near(-star))
        return {InvertibilityStatus::ExcludedParameter, "r = -(P(n)/P(n-1))^(n/2)", {}};
    return {InvertibilityStatus::GuaranteedInvertible, "r < 0 avoids -(P(n)/P(n-1))^(n/2)", {}};
}

struct MinEigen {
    std::size_t m = 0;
    Real value;
};

inline MinEigen min_eigen_magnitude(const EigenSpectrum& s) {
    MinEigen out;
    PrecisionScope scope(s.grid.precision_bits);
    out.value = cabs(s.lambdas[0]);
    for (std::size_t m = 1; m < s.lambdas.size(); ++m) {
        const Real v = cabs(s.lambdas[m]);
        if (v < out.value) {
            out.value = v;
            out.m = m;
        }
    }
    return out;
}

/// min_m |lambda_m| from directly evaluated eigenvalues.
inline MinEigen min_eigen_magnitude(unsigned k, std::size_t n, const Scalar& r, unsigned bits) {
    return min_eigen_magnitude(eigenvalues_direct(k, n, r, bits));
}

inline MinEigen min_eigen_magnitude(const std::vector<Real>& generator, const Scalar& r,
                                    unsigned bits) {
    return min_eigen_magnitude(eigenvalues_direct(generator, r, bits));
}

// ------------------------------------------------------------------ scan

inline constexpr unsigned kScanDefaultPrecisionBits = 512;

enum class ScanVerdict { Invertible, Singular, Undetermined };

inline const char* to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::Invertible: return "invertible";
        case ScanVerdict::Singular: return "singular";
        case ScanVerdict::Undetermined: return "undetermined";
    }
    return "unknown";
}

struct ScanCell {
    unsigned k = 1;
    std::size_t n = 0;
    int sign = 1;
    Real log10_abs_r;
    Real min_abs_lambda_log10;
    /// min(|r1^n - r|, |r2^n - r|) / |r|.
    Real closed_gap;
    /// min |lambda_m| / sum_j P(j) |rho|^j.
    Real eigen_gap;
    std::size_t argmin_m = 0;
    ScanVerdict verdict = ScanVerdict::Undetermined;
    /// False when the two criteria point in different directions.
    bool criteria_agree = true;
    /// Cells reported as counterexamples in the literature (k = 5, n = 28..30).
    bool reported_cell = false;
};

/// Singular below 2^(-bits/2), invertible above 2^(-bits/4), otherwise
/// undetermined.
inline ScanVerdict classify_gap(const Real& gap, unsigned bits) {
    if (gap < tolerance(bits, 2)) return ScanVerdict::Singular;
    if (gap > tolerance(bits, 4)) return ScanVerdict::Invertible;
    return ScanVerdict::Undetermined;
}

inline bool is_reported_cell(unsigned k, std::size_t n) { return k == 5 && n >= 28 && n <= 30; }

/// Tests r* = sign (P(n)/P(n-1))^(n/2) for singularity with two criteria:
/// the closed one (r1^n = r or r2^n = r) and the smallest eigenvalue
/// magnitude relative to its scale. A criterion calls the cell singular
/// below 2^(-bits/2) and invertible above 2^(-bits/4); anything else, or a
/// disagreement, leaves the cell undetermined.
inline ScanCell scan_cell(unsigned k, std::size_t n, int sign, unsigned bits) {
    require_k(k);
    detail::require_n(n, 2, "scan_cell");
    PrecisionScope scope(bits);
    ScanCell c;
    c.k = k;
    c.n = n;
    c.sign = sign < 0 ? -1 : 1;
    c.reported_cell = is_reported_cell(k, n);

    const Real star = excluded_magnitude(k, n);
    const Real rv = c.sign * star;
    const Scalar r{Complex(rv, Real(0))};
    c.log10_abs_r = mp::log10(star);

    const Complex rc(rv, Real(0));
    const auto [r1, r2] = detail::det_quadratic_roots(k, n, rc);
    c.closed_gap = std::min(cabs(cpow(r1, n) - rc), cabs(cpow(r2, n) - rc)) / star;

    const EigenSpectrum s = eigenvalues_direct(k, n, r, bits);
    const MinEigen me = min_eigen_magnitude(s);
    c.argmin_m = me.m;
    c.min_abs_lambda_log10 = me.value == 0 ? Real(-std::numeric_limits<double>::infinity())
                                           : Real(mp::log10(me.value));
    const std::vector<Real> a = detail::pell_reals(k, n);
    const Real rho_abs = cabs(s.grid.rho[0]);
    Real scale = 0;
    for (std::size_t j = a.size(); j-- > 0;) scale = scale * rho_abs + a[j];
    c.eigen_gap = me.value / scale;

    const ScanVerdict closed = classify_gap(c.closed_gap, bits);
    const ScanVerdict eig = classify_gap(c.eigen_gap, bits);
    c.criteria_agree = closed == eig;
    c.verdict = c.criteria_agree ? closed : ScanVerdict::Undetermined;
    return c;
}

struct ScanRange {
    unsigned k_min = 1, k_max = 10;
    std::size_t n_min = 2, n_max = 30;
};

/// Cells in (k, n) order.
inline std::vector<ScanCell> counterexample_scan(const ScanRange& range, int sign,
                                                 unsigned bits = kScanDefaultPrecisionBits) {
    if (range.k_min < 1 || range.k_min > range.k_max || range.n_min < 2 ||
        range.n_min > range.n_max)
        throw PreconditionError("scan needs 1 <= k_min <= k_max and 2 <= n_min <= n_max");
    std::vector<ScanCell> out;
    for (unsigned k = range.k_min; k <= range.k_max; ++k)
        for (std::size_t n = range.n_min; n <= range.n_max; ++n)
            out.push_back(scan_cell(k, n, sign, bits));
    return out;
}

/// Flags column: reported cells are marked, together with whether our verdict
/// agrees with the reported counterexample.
inline std::string scan_flags(const ScanCell& c) {
    std::string f;
    if (c.reported_cell) {
        f = "reported_counterexample";
        f += c.verdict == ScanVerdict::Singular ? ";agrees_with_report" : ";disagrees_with_report";
    }
    if (!c.criteria_agree) f += std::string(f.empty() ? "" : ";") + "criteria_disagree";
    return f;
}

inline std::string scan_csv(const std::vector<ScanCell>& cells) {
    std::string out = "k,n,sign,log10|r*|,min_abs_lambda_log10,verdict,flags\n";
    for (const ScanCell& c : cells) {
        out += std::to_string(c.k) + "," + std::to_string(c.n) + "," + (c.sign < 0 ? "-" : "+") +
               "," + fixed(to_double(c.log10_abs_r), 6) + "," +
               fixed(to_double(c.min_abs_lambda_log10), 6) + "," + to_string(c.verdict) + "," +
               scan_flags(c) + "\n";
    }
    return out;
}

} // namespace kpt
