#include <gtest/gtest.h>

#include "kpt/scalar.hpp"
#include "kpt/sequence.hpp"

using namespace kpt;

namespace {

// Roots of x^3 - 2x^2 - x - 1 and x^3 - 20x^2 - 10x - 1, computed
// independently with mpmath.polyroots at 300 bits.
const char* kAlphaK1 = "2.5468182768840820791359975088097915288112703374520061295514745747112";
const char* kBetaReK1 = "-0.27340913844204103956799875440489576440563516872600306477573728735560";
const char* kBetaImK1 = "0.56382109282911866633770831661130159386417203420797503850954389649200";
const char* kAlphaK10 = "20.490414830059445989433889051087155545246490113114721211948681720901";
const char* kSmallK10 = "-0.35161873799116231971470787688250148527709812738828501525577740424353";
const char* kMidK10 = "-0.13879609206828366971918117420465405996939198572643619669290431665795";

Real real_of(const char* s) { return Real(s); }

} // namespace

TEST(Term, InitialConditions) {
    EXPECT_EQ(term(1, 0), 0);
    EXPECT_EQ(term(1, 1), 1);
    for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(term(k, 2), 2 * k);
}

TEST(Term, ThirdTermIs4kSquaredPlusK) {
    for (unsigned k = 1; k <= 20; ++k) EXPECT_EQ(term(k, 3), BigInt(4 * k * k + k));
}

TEST(Term, SmallValues) {
    EXPECT_EQ(term(1, 4), 13);
    EXPECT_EQ(term(2, 3), 18);
    EXPECT_EQ(term(1, 10), 3535);
    EXPECT_EQ(term(2, 8), 33048);
}

TEST(Term, ExactBeyond64Bits) {
    // P(10, 40) ~ 20.49^39 is far beyond 2^64; check the recurrence at the top.
    const BigInt a = term(10, 40), b = term(10, 39), c = term(10, 38), d = term(10, 37);
    EXPECT_GT(a, BigInt(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_EQ(a, 20 * b + 10 * c + d);
}

TEST(Term, RejectsZeroK) {
    EXPECT_THROW(term(0, 3), PreconditionError);
    EXPECT_THROW(SequenceCache(0), PreconditionError);
}

TEST(TermsUpto, Examples) {
    const auto c1 = terms_upto(1, 4);
    std::vector<BigInt> got(c1.terms().begin(), c1.terms().end());
    EXPECT_EQ(got, (std::vector<BigInt>{0, 1, 2, 5, 13}));

    const auto c2 = terms_upto(1, 2);
    EXPECT_EQ(c2.max_index(), 2U);

    const auto c3 = terms_upto(3, 3);
    got.assign(c3.terms().begin(), c3.terms().end());
    EXPECT_EQ(got, (std::vector<BigInt>{0, 1, 6, 39}));

    EXPECT_THROW(terms_upto(1, 1), PreconditionError);
}

TEST(TermsUpto, CacheInvariants) {
    for (unsigned k = 1; k <= 10; ++k) {
        const auto c = terms_upto(k, 120);
        EXPECT_EQ(c[0], 0);
        EXPECT_EQ(c[1], 1);
        EXPECT_EQ(c[2], 2 * k);
        for (std::size_t n = 3; n <= 120; ++n)
            ASSERT_EQ(c[n], 2 * k * c[n - 1] + k * c[n - 2] + c[n - 3]);
        for (std::size_t n = 2; n <= 120; ++n) ASSERT_GE(c[n], c[n - 1]);
        EXPECT_THROW(c[121], std::out_of_range);
    }
}

TEST(Cardano, ExactParameters) {
    for (unsigned k = 1; k <= 10; ++k) {
        const CardanoWork w = cardano(k, 128);
        const Rational kk = k;
        EXPECT_EQ(w.p, -(4 * kk * kk + 3 * kk) / 3);
        EXPECT_EQ(w.q, -(16 * kk * kk * kk + 18 * kk * kk + 27) / 27);
        EXPECT_EQ(w.delta, cardano_discriminant_closed(k));
    }
}

TEST(Cardano, DiscriminantNeverZero) {
    for (unsigned k = 1; k <= 10000; ++k) ASSERT_NE(cardano_discriminant_closed(k), 0) << k;
}

TEST(Cardano, DiscriminantSignChangesAtNine) {
    // All three roots become real once delta < 0.
    for (unsigned k = 1; k <= 8; ++k) EXPECT_GT(cardano_discriminant_closed(k), 0) << k;
    for (unsigned k = 9; k <= 12; ++k) EXPECT_LT(cardano_discriminant_closed(k), 0) << k;
}

TEST(CharRoots, BracketCertifiedExactly) {
    for (unsigned k = 1; k <= 10; ++k) {
        EXPECT_LT(phi(k, Rational(2 * k)), 0);
        EXPECT_GT(phi(k, Rational(2 * k + 1)), 0);
        EXPECT_EQ(phi(k, Rational(2 * k)), -Rational(2 * k * k + 1));
        EXPECT_EQ(phi(k, Rational(2 * k + 1)), Rational(2 * k * k + 3 * k));
    }
}

TEST(CharRoots, MatchesIndependentReferenceK1) {
    PrecisionScope scope(256);
    const CubicRoots r = char_roots(1, 256);
    EXPECT_LT(mp::abs(r.alpha - real_of(kAlphaK1)), Real("1e-65"));
    // beta carries the positive imaginary part.
    const Real beta_err = mp::abs(r.beta.real() - real_of(kBetaReK1)) +
                          mp::abs(r.beta.imag() - real_of(kBetaImK1));
    EXPECT_LT(beta_err, Real("1e-65"));
    EXPECT_EQ(r.gamma.real(), r.beta.real());
    EXPECT_EQ(r.gamma.imag(), -r.beta.imag());
    EXPECT_NEAR(to_double(r.alpha), 2.5468, 1e-4);
}

TEST(CharRoots, AllRealRegimeK10) {
    PrecisionScope scope(256);
    const CubicRoots r = char_roots(10, 256);
    EXPECT_LT(mp::abs(r.alpha - real_of(kAlphaK10)), Real("1e-60"));
    EXPECT_EQ(r.beta.imag(), 0);
    EXPECT_EQ(r.gamma.imag(), 0);
    EXPECT_LT(mp::abs(r.beta.real() - real_of(kSmallK10)), Real("1e-65"));
    EXPECT_LT(mp::abs(r.gamma.real() - real_of(kMidK10)), Real("1e-65"));
}

TEST(CharRoots, Invariants) {
    for (unsigned bits : {64U, 256U, 512U}) {
        for (unsigned k = 1; k <= 12; ++k) {
            PrecisionScope scope(bits);
            const CubicRoots r = char_roots(k, bits);
            const Real tol = tolerance(bits, 2);
            EXPECT_GT(r.alpha, 2 * k);
            EXPECT_LT(r.alpha, 2 * k + 1);
            for (const Complex& x : r.roots()) EXPECT_LE(phi_relative_residual(k, x), tol);

            const Complex sum = r.roots()[0] + r.roots()[1] + r.roots()[2];
            EXPECT_LE(cabs(sum - Complex(Real(2 * k), Real(0))), tol * 2 * k);

            EXPECT_LE(cabs(r.binet_A + r.binet_B + r.binet_C), tol);
            EXPECT_LE(r.cardano_deviation, tol);

            // Reciprocals are the roots of psi(x) = 1 - 2k x - k x^2 - x^3.
            for (const Complex& x : r.roots()) {
                const Complex y = Complex(Real(1), Real(0)) / x;
                const Complex psi = Complex(Real(1), Real(0)) - Real(2 * k) * y - Real(k) * y * y -
                                    y * y * y;
                EXPECT_LE(cabs(psi), tol * 8 * k);
            }
        }
    }
}

TEST(CharRoots, CardanoAgreesPairwise) {
    for (unsigned k = 1; k <= 12; ++k) {
        PrecisionScope scope(256);
        const CubicRoots r = char_roots(k, 256);
        const CardanoWork w = cardano(k, 256);
        for (const Complex& x : r.roots()) {
            Real best = cabs(x - w.roots[0]);
            for (const Complex& c : w.roots) best = std::min(best, cabs(x - c));
            EXPECT_LE(best, tolerance(256, 2) * std::max(Real(1), cabs(x))) << "k=" << k;
        }
    }
}

TEST(CharRoots, RejectsLowPrecision) {
    EXPECT_THROW(char_roots(1, 32), PreconditionError);
}

TEST(Binet, Examples) {
    PrecisionScope scope(256);
    EXPECT_LT(mp::abs(binet_term(1, 0, 256)), tolerance(256, 4));
    EXPECT_LT(mp::abs(binet_term(1, 4, 256) - 13) / 13, tolerance(256, 4));
    const Real exact = to_real(term(2, 6));
    EXPECT_LT(mp::abs(binet_term(2, 6, 256) - exact) / exact, tolerance(256, 4));
}

TEST(Binet, AgreesWithRecurrenceOverGrid) {
    for (unsigned bits : {128U, 256U}) {
        PrecisionScope scope(bits);
        const Real tol = tolerance(bits, 4);
        for (unsigned k = 1; k <= 10; ++k) {
            const CubicRoots roots = char_roots(k, bits);
            const SequenceCache seq(k, 200);
            for (std::size_t n = 0; n <= 200; ++n) {
                const Real exact = to_real(seq[n]);
                const Real err = mp::abs(binet_term(roots, n) - exact) / std::max(Real(1), exact);
                ASSERT_LT(err, tol) << "k=" << k << " n=" << n << " bits=" << bits;
            }
        }
    }
}

TEST(Growth, RatioConvergesToAlpha) {
    PrecisionScope scope(256);
    for (unsigned k = 1; k <= 10; ++k) {
        const CubicRoots roots = char_roots(k, 256);
        const Real ratio = to_real(term(k, 100)) / to_real(term(k, 99));
        EXPECT_LT(mp::abs(ratio - roots.alpha), Real("1e-20")) << k;
    }
}
