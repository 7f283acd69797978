#include <gtest/gtest.h>

#include "kpt/fastops.hpp"
#include "kpt/spectral.hpp"
#include "property.hpp"

using namespace kpt;

namespace {

std::vector<cdouble> random_vector(prop::Gen& gen, std::size_t n) {
    std::vector<cdouble> v(n);
    for (cdouble& z : v) z = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
    return v;
}

std::vector<cdouble> c(std::initializer_list<double> v) {
    std::vector<cdouble> out;
    for (double x : v) out.emplace_back(x, 0.0);
    return out;
}

void expect_close(const std::vector<cdouble>& a, const std::vector<cdouble>& b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    EXPECT_LE(relative_error(a, b), tol);
}

} // namespace

TEST(Dft, NaiveExamples) {
    expect_close(dft_naive(c({1, 0, 0, 0})), c({1, 1, 1, 1}), 1e-15);
    expect_close(dft_naive(c({1, 1, 1, 1})), c({4, 0, 0, 0}), 1e-15);
    // Positive exponent forward: w_4 = i.
    expect_close(dft_naive(c({0, 1, 0, 0})), {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, 1e-15);
}

TEST(Fft, Examples) {
    std::vector<cdouble> delta(8, 0.0);
    delta[0] = 1.0;
    expect_close(fft(delta), std::vector<cdouble>(8, 1.0), 1e-15);
    expect_close(fft(c({3.5})), c({3.5}), 0.0);
    EXPECT_TRUE(fft(std::vector<cdouble>{}).empty());
}

TEST(Fft, MatchesNaiveForAllSmallSizes) {
    prop::Gen gen(5);
    for (std::size_t n = 1; n <= 70; ++n) {
        const auto x = random_vector(gen, n);
        ASSERT_LE(relative_error(fft(x), dft_naive(x)), 1e-12) << n;
    }
}

TEST(Fft, MatchesNaiveForLargerSizes) {
    prop::Gen gen(6);
    for (std::size_t n : {12U, 100U, 257U, 1000U, 1024U, 4096U, 4095U}) {
        const auto x = random_vector(gen, n);
        ASSERT_LE(relative_error(fft(x), dft_naive(x)), 1e-12) << n;
    }
}

TEST(Fft, RoundTrip) {
    prop::Gen gen(7);
    for (std::size_t n : {1U, 2U, 3U, 17U, 64U, 257U, 1024U, 3000U, 4096U}) {
        const auto x = random_vector(gen, n);
        const FftPlan plan(n);
        ASSERT_LE(relative_error(plan.inverse(plan.forward(x)), x), 1e-12) << n;
    }
}

TEST(FastMatvec, Examples) {
    const FastCirculantOperator op1(c({0, 1, 2}), 1.0);
    expect_close(fast_matvec(op1, c({1, 0, 0})), c({0, 2, 1}), 1e-14);
    const FastCirculantOperator op2(c({0, 1, 2}), 2.0);
    expect_close(fast_matvec(op2, c({1, 1, 1})), c({3, 5, 6}), 1e-14);
    prop::Gen gen(8);
    const auto x = random_vector(gen, 10);
    const FastCirculantOperator id(c({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), cdouble(-0.5, 2.0));
    expect_close(fast_matvec(id, x), x, 1e-14);
}

TEST(FastMatvec, Errors) {
    const FastCirculantOperator op(c({0, 1, 2}), 1.0);
    EXPECT_THROW(fast_matvec(op, c({1, 0})), DimensionMismatch);
    EXPECT_THROW(FastCirculantOperator(c({0, 1}), 0.0), ZeroR);
}

TEST(FastMatvec, MatchesDense) {
    prop::Gen gen(9);
    const std::vector<cdouble> rs{1.0, -1.0, 0.25, 4.0, {0.0, 1.0}, {-2.0, 3.0}, {0.3, -0.1}};
    for (std::size_t n : {2U, 3U, 5U, 12U, 64U, 100U, 257U, 1024U}) {
        for (const cdouble& r : rs) {
            const auto a = random_vector(gen, n);
            const auto x = random_vector(gen, n);
            const auto dense = matvec_dense(build(r, a), std::span<const cdouble>(x));
            const FastCirculantOperator op(a, r);
            ASSERT_LE(relative_error(op.apply(x), dense), 1e-9) << n << " " << r;
        }
    }
}

TEST(FastMatvec, SpectrumMatchesDirectEigenvalues) {
    for (const char* rt : {"1", "-3/2", "2+i"}) {
        const Scalar r = Scalar::parse(rt, 128);
        const std::size_t n = 9;
        const FastCirculantOperator op(pell_generator<cdouble>(2, n), r.to_cdouble());
        const EigenSpectrum s = eigenvalues_direct(2, n, r, 128);
        for (std::size_t m = 0; m < n; ++m) {
            const cdouble l = to_cdouble(s.lambdas[m]);
            EXPECT_LE(std::abs(op.scaled_spectrum()[m] - l), 1e-11 * std::abs(l)) << rt << " " << m;
        }
    }
}

TEST(FastMatvec, ShiftPowerIsScalar) {
    for (std::size_t n : {3U, 12U, 64U, 257U}) {
        for (const cdouble& r : {cdouble(2.0), cdouble(-0.5), cdouble(0.0, 3.0)}) {
            std::vector<cdouble> g(n, 0.0);
            g[1] = 1.0;
            const FastCirculantOperator shift(g, r);
            std::vector<cdouble> v(n, 0.0);
            v[0] = 1.0;
            for (std::size_t i = 0; i < n; ++i) v = shift.apply(v);
            std::vector<cdouble> expect(n, 0.0);
            expect[0] = r;
            ASSERT_LE(relative_error(v, expect), 1e-8) << n << " " << r;
        }
    }
}

TEST(FastMatvec, Linear) {
    prop::Gen gen(10);
    const std::size_t n = 48;
    const FastCirculantOperator op(random_vector(gen, n), cdouble(1.5, -0.5));
    const auto x = random_vector(gen, n), y = random_vector(gen, n);
    const cdouble a(0.7, 0.2), b(-1.1, 0.4);
    std::vector<cdouble> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = a * x[i] + b * y[i];
    const auto fx = op.apply(x), fy = op.apply(y);
    std::vector<cdouble> expect(n);
    for (std::size_t i = 0; i < n; ++i) expect[i] = a * fx[i] + b * fy[i];
    EXPECT_LE(relative_error(op.apply(comb), expect), 1e-13);
}

TEST(FastMatvec, FirstColumn) {
    const auto a = scaled_pell_generator(3, 40);
    const cdouble r(1.0, 1.0);
    const FastCirculantOperator op(a, r);
    std::vector<cdouble> e0(40, 0.0);
    e0[0] = 1.0;
    const auto dense = build(r, a);
    std::vector<cdouble> col(40);
    for (std::size_t i = 0; i < 40; ++i) col[i] = dense(i, 0);
    EXPECT_LE(relative_error(op.apply(e0), col), 1e-10);
}

TEST(Bench, ScaledGeneratorAndDeterministicInput) {
    const auto a = scaled_pell_generator(1, 10);
    const SequenceCache seq(1, 10);
    const double alpha = to_double(char_roots(1, 64).alpha);
    for (std::size_t j = 0; j < 10; ++j)
        EXPECT_NEAR(a[j].real(), seq[j].convert_to<double>() / std::pow(alpha, double(j)), 1e-12);
    EXPECT_EQ(deterministic_vector(16), deterministic_vector(16));
    for (const cdouble& v : deterministic_vector(1000)) {
        EXPECT_LE(std::abs(v.real()), 1.0);
        EXPECT_LE(std::abs(v.imag()), 1.0);
    }
}

TEST(Bench, SmallSizes) {
    const auto rows = bench_matvec({2, 64}, 1, 1.0, 0.001);
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[0].path, "dense");
    EXPECT_EQ(rows[1].path, "fast");
    EXPECT_LE(rows[1].rel_err, 1e-12);
    EXPECT_LE(rows[3].rel_err, 1e-9);
    for (const BenchRow& row : rows) EXPECT_GT(row.mean_ns, 0.0);
    const std::string csv = bench_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,path,mean_ns,rel_err");
}
