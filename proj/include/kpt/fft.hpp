#pragma once

// Discrete Fourier transforms in double precision.
//
// Convention: forward X_m = sum_j x_j w^(jm) with w = e^(+2 pi i / n);
// inverse divides by n and uses the conjugate root.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace kpt {

using cdouble = std::complex<double>;

/// Sign of the exponent in the forward transform.
inline constexpr int kForwardSign = +1;

namespace detail {

/// e^(sign * 2 pi i * num / den), with num reduced mod den first.
inline cdouble unit_phase(std::size_t num, std::size_t den, int sign) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % den) /
                         static_cast<double>(den);
    return {std::cos(angle), sign * std::sin(angle)};
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace detail

/// Literal O(n^2) forward DFT.
inline std::vector<cdouble> dft_naive(std::span<const cdouble> x) {
    const std::size_t n = x.size();
    std::vector<cdouble> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            acc += x[j] * detail::unit_phase(j * m, n, kForwardSign);
        out[m] = acc;
    }
    return out;
}

/// Precomputed transform of one length: iterative radix-2 for powers of
/// two, Bluestein's chirp-z (on a radix-2 convolution) otherwise.
class FftPlan {
public:
    explicit FftPlan(std::size_t n) : n_(n) {
        if (n_ <= 1) return;
        if (detail::is_power_of_two(n_)) {
            twiddles_ = radix2_twiddles(n_);
            return;
        }
        m_ = 1;
        while (m_ < 2 * n_ - 1) m_ <<= 1;
        twiddles_ = radix2_twiddles(m_);
        // c_j = e^(sign * pi i j^2 / n); j^2 is reduced mod 2n in integers.
        chirp_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j)
            chirp_[j] = detail::unit_phase((j * j) % (2 * n_), 2 * n_, kForwardSign);
        filter_.assign(m_, cdouble(0.0));
        filter_[0] = std::conj(chirp_[0]);
        for (std::size_t j = 1; j < n_; ++j) filter_[j] = filter_[m_ - j] = std::conj(chirp_[j]);
        radix2(filter_, false);
    }

    std::size_t size() const noexcept { return n_; }

    std::vector<cdouble> forward(std::span<const cdouble> x) const {
        std::vector<cdouble> v(x.begin(), x.end());
        transform(v);
        return v;
    }

    /// Inverse transform, including the 1/n factor.
    std::vector<cdouble> inverse(std::span<const cdouble> x) const {
        std::vector<cdouble> v(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) v[j] = std::conj(x[j]);
        transform(v);
        const double scale = 1.0 / static_cast<double>(n_);
        for (cdouble& z : v) z = std::conj(z) * scale;
        return v;
    }

    /// In-place forward transform.
    void transform(std::vector<cdouble>& v) const {
        if (n_ <= 1) return;
        if (chirp_.empty()) {
            radix2(v, false);
            return;
        }
        std::vector<cdouble> a(m_, cdouble(0.0));
        for (std::size_t j = 0; j < n_; ++j) a[j] = v[j] * chirp_[j];
        radix2(a, false);
        for (std::size_t j = 0; j < m_; ++j) a[j] *= filter_[j];
        radix2(a, true);
        const double scale = 1.0 / static_cast<double>(m_);
        for (std::size_t j = 0; j < n_; ++j) v[j] = a[j] * scale * chirp_[j];
    }

private:
    static std::vector<cdouble> radix2_twiddles(std::size_t len) {
        std::vector<cdouble> t(len / 2);
        for (std::size_t j = 0; j < len / 2; ++j) t[j] = detail::unit_phase(j, len, kForwardSign);
        return t;
    }

    /// Unnormalized radix-2 transform on v (size = 2 * twiddles_.size());
    /// `conjugate` selects the opposite exponent sign.
    void radix2(std::vector<cdouble>& v, bool conjugate) const {
        const std::size_t len = v.size();
        for (std::size_t i = 1, j = 0; i < len; ++i) {
            std::size_t bit = len >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(v[i], v[j]);
        }
        for (std::size_t half = 1; half < len; half <<= 1) {
            const std::size_t stride = len / (2 * half);
            for (std::size_t start = 0; start < len; start += 2 * half)
                for (std::size_t j = 0; j < half; ++j) {
                    cdouble w = twiddles_[j * stride];
                    if (conjugate) w = std::conj(w);
                    const cdouble u = v[start + j];
                    const cdouble t = v[start + j + half] * w;
                    v[start + j] = u + t;
                    v[start + j + half] = u - t;
                }
        }
    }

    std::size_t n_;
    std::size_t m_ = 0;
    std::vector<cdouble> twiddles_;
    std::vector<cdouble> chirp_;
    std::vector<cdouble> filter_;
};

inline std::vector<cdouble> fft(std::span<const cdouble> x) { return FftPlan(x.size()).forward(x); }

inline std::vector<cdouble> ifft(std::span<const cdouble> x) { return FftPlan(x.size()).inverse(x); }

} // namespace kpt
