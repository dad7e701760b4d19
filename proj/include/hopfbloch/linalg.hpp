#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

namespace hopfbloch {

using Complex = std::complex<double>;

template <std::size_t N>
using CMatrix = std::array<std::array<Complex, N>, N>;

template <std::size_t N>
using CVector = std::array<Complex, N>;

using Matrix2c = CMatrix<2>;
using Matrix4c = CMatrix<4>;

template <std::size_t N>
constexpr CMatrix<N> identity_matrix() {
    CMatrix<N> m{};
    for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
    return m;
}

template <std::size_t N>
CMatrix<N> operator*(const CMatrix<N>& a, const CMatrix<N>& b) {
    CMatrix<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j < N; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

template <std::size_t N>
CVector<N> operator*(const CMatrix<N>& a, const CVector<N>& v) {
    CVector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r[i] += a[i][j] * v[j];
    return r;
}

template <std::size_t N>
CMatrix<N> adjoint(const CMatrix<N>& a) {
    CMatrix<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r[i][j] = std::conj(a[j][i]);
    return r;
}

template <std::size_t N>
Complex trace(const CMatrix<N>& a) {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i) t += a[i][i];
    return t;
}

template <std::size_t N>
double max_abs_diff(const CMatrix<N>& a, const CMatrix<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

}  // namespace hopfbloch
