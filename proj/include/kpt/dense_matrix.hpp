#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kpt/scalar.hpp"

namespace kpt {

/// Square n x n matrix, row-major.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const T> data() const noexcept { return data_; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

template <class U, class T, class F>
DenseMatrix<U> map(const DenseMatrix<T>& m, F&& f) {
    DenseMatrix<U> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = f(m(i, j));
    return out;
}

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

template <class T>
std::vector<T> matvec_dense(const DenseMatrix<T>& m, std::span<const T> x) {
    require_same_size(m.size(), x.size(), "matvec_dense");
    std::vector<T> y(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        T acc = T(0);
        const auto r = m.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

/// Product a * b. Zero entries of `a` are skipped, which keeps products with
/// sparse generators cheap for exact element types.
template <class T>
DenseMatrix<T> multiply(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    require_same_size(a.size(), b.size(), "multiply");
    const std::size_t n = a.size();
    DenseMatrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const T& ail = a(i, l);
            if (is_zero_of(ail)) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

/// Entrywise (Hadamard) product.
template <class T>
DenseMatrix<T> hadamard(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    require_same_size(a.size(), b.size(), "hadamard");
    DenseMatrix<T> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

template <class T>
DenseMatrix<T> conj_transpose(const DenseMatrix<T>& a) {
    DenseMatrix<T> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(j, i) = conj_of(a(i, j));
    return c;
}

/// sum |a_ij|^2, exact for exact element types.
template <class T>
auto frobenius_squared_direct(const DenseMatrix<T>& m) {
    decltype(abs2_of(std::declval<T>())) acc = 0;
    for (const T& v : m.data()) acc += abs2_of(v);
    return acc;
}

/// sum |a_ij|, exact for exact element types.
template <class T>
auto l1_direct(const DenseMatrix<T>& m) {
    decltype(abs_of(std::declval<T>())) acc = 0;
    for (const T& v : m.data()) acc += abs_of(v);
    return acc;
}

template <class T>
double frobenius_direct(const DenseMatrix<T>& m) {
    const auto sq = frobenius_squared_direct(m);
    if constexpr (std::is_same_v<std::decay_t<decltype(sq)>, double>)
        return std::sqrt(sq);
    else
        return std::sqrt(sq.template convert_to<double>());
}

/// Largest Euclidean row length r1(A) and column length c1(A).
struct RowColNorms {
    double row = 0.0;
    double col = 0.0;
};

template <class T>
RowColNorms row_col_length_norms(const DenseMatrix<T>& m) {
    const std::size_t n = m.size();
    std::vector<double> rows(n, 0.0), cols(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double v;
            if constexpr (std::is_same_v<T, double> || std::is_same_v<T, cdouble>)
                v = abs2_of(m(i, j));
            else
                v = abs2_of(m(i, j)).template convert_to<double>();
            rows[i] += v;
            cols[j] += v;
        }
    RowColNorms out;
    for (std::size_t i = 0; i < n; ++i) {
        out.row = std::max(out.row, std::sqrt(rows[i]));
        out.col = std::max(out.col, std::sqrt(cols[i]));
    }
    return out;
}

} // namespace kpt
