#pragma once

// O(n log n) r-circulant matvec. With rho = r^(1/n) (principal branch),
//   Circ_r(a) = D F diag(lambda) F^-1 D^-1,   D = diag(rho^j),
// where F is the forward DFT matrix and lambda = F (a_j rho^j). Accuracy is
// only claimed for |r| in [1/4, 4]: D spans a dynamic range of |r|.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "kpt/circulant.hpp"
#include "kpt/fft.hpp"

namespace kpt {

class FastCirculantOperator {
public:
    FastCirculantOperator(std::vector<cdouble> generator, cdouble r)
        : n_(generator.size()), r_(r), plan_(generator.size()) {
        if (n_ == 0) throw PreconditionError("fast operator needs n >= 1");
        if (r == cdouble(0.0)) throw ZeroR();
        const double mag = std::pow(std::abs(r), 1.0 / static_cast<double>(n_));
        const double phase = std::arg(r) / static_cast<double>(n_);
        scale_.resize(n_);
        inv_scale_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            const double jj = static_cast<double>(j);
            scale_[j] = std::polar(std::pow(mag, jj), phase * jj);
            inv_scale_[j] = std::polar(std::pow(mag, -jj), -phase * jj);
        }
        for (std::size_t j = 0; j < n_; ++j) generator[j] *= scale_[j];
        spectrum_ = plan_.forward(generator);
    }

    std::size_t size() const noexcept { return n_; }
    cdouble r() const noexcept { return r_; }
    /// lambda_m = Psi_a(rho w^m).
    const std::vector<cdouble>& scaled_spectrum() const noexcept { return spectrum_; }
    /// rho^j
    const std::vector<cdouble>& rho_scale() const noexcept { return scale_; }

    std::vector<cdouble> apply(std::span<const cdouble> x) const {
        require_same_size(x.size(), n_, "fast_matvec");
        std::vector<cdouble> v(n_);
        for (std::size_t j = 0; j < n_; ++j) v[j] = x[j] * inv_scale_[j];
        v = plan_.inverse(v);
        for (std::size_t m = 0; m < n_; ++m) v[m] *= spectrum_[m];
        plan_.transform(v);
        for (std::size_t j = 0; j < n_; ++j) v[j] *= scale_[j];
        return v;
    }

private:
    std::size_t n_;
    cdouble r_;
    FftPlan plan_;
    std::vector<cdouble> spectrum_;
    std::vector<cdouble> scale_;
    std::vector<cdouble> inv_scale_;
};

inline std::vector<cdouble> fast_matvec(const FastCirculantOperator& op,
                                        std::span<const cdouble> x) {
    return op.apply(x);
}

/// ||a - b|| / ||b|| in the Euclidean norm (||a|| when b = 0).
inline double relative_error(std::span<const cdouble> a, std::span<const cdouble> b) {
    require_same_size(a.size(), b.size(), "relative_error");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

/// P(j) alpha^(-j), from the rescaled recurrence
/// b_j = 2k b_{j-1}/alpha + k b_{j-2}/alpha^2 + b_{j-3}/alpha^3. Stays O(1)
/// for any n, so large benchmark sizes do not overflow doubles.
inline std::vector<cdouble> scaled_pell_generator(unsigned k, std::size_t n) {
    const double alpha = to_double(char_roots(k, kMinPrecisionBits).alpha);
    const double kk = k;
    std::vector<double> b(std::max<std::size_t>(n, 3));
    b[0] = 0.0;
    b[1] = 1.0 / alpha;
    b[2] = 2.0 * kk / (alpha * alpha);
    for (std::size_t j = 3; j < b.size(); ++j)
        b[j] = (2.0 * kk * b[j - 1] + (kk * b[j - 2] + b[j - 3] / alpha) / alpha) / alpha;
    std::vector<cdouble> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = b[j];
    return out;
}

/// Deterministic test vector with entries in [-1, 1] + [-1, 1] i, drawn
/// from raw mt19937 output (the engine's sequence is fixed by the standard).
inline std::vector<cdouble> deterministic_vector(std::size_t n, std::uint32_t seed = 12345) {
    std::mt19937 eng(seed);
    const auto unit = [&] { return static_cast<double>(eng()) / 2147483647.5 - 1.0; };
    std::vector<cdouble> x(n);
    for (cdouble& v : x) {
        const double re = unit();
        v = cdouble(re, unit());
    }
    return x;
}

struct BenchRow {
    std::size_t n = 0;
    std::string path;   // "dense" or "fast"
    double mean_ns = 0.0;
    double rel_err = 0.0;
};

/// Wall time per matvec for the dense and fast paths on Circ_r of the
/// scaled generator; rel_err is measured against the dense product.
/// Each path repeats until `min_seconds` have elapsed.
inline std::vector<BenchRow> bench_matvec(const std::vector<std::size_t>& n_list, unsigned k,
                                          cdouble r, double min_seconds = 0.05) {
    using clock = std::chrono::steady_clock;
    const auto time_it = [&](auto&& body) {
        std::size_t reps = 0;
        const auto start = clock::now();
        double elapsed = 0.0;
        do {
            body();
            ++reps;
            elapsed = std::chrono::duration<double>(clock::now() - start).count();
        } while (elapsed < min_seconds);
        return elapsed * 1e9 / static_cast<double>(reps);
    };

    std::vector<BenchRow> rows;
    for (std::size_t n : n_list) {
        if (n < 2) throw PreconditionError("bench sizes must be >= 2");
        const std::vector<cdouble> a = scaled_pell_generator(k, n);
        const std::vector<cdouble> x = deterministic_vector(n);
        const DenseMatrix<cdouble> dense = build(r, a);
        const FastCirculantOperator op(a, r);

        std::vector<cdouble> y_dense, y_fast;
        const double t_dense = time_it([&] { y_dense = matvec_dense(dense, std::span<const cdouble>(x)); });
        const double t_fast = time_it([&] { y_fast = op.apply(x); });
        rows.push_back({n, "dense", t_dense, 0.0});
        rows.push_back({n, "fast", t_fast, relative_error(y_fast, y_dense)});
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "n,path,mean_ns,rel_err\n";
    for (const BenchRow& row : rows)
        out += std::to_string(row.n) + "," + row.path + "," + fixed(row.mean_ns, 1) + "," +
               shortest(row.rel_err) + "\n";
    return out;
}

} // namespace kpt
