#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

// Classical orthogonal polynomials via three-term recurrences, for real and
// complex arguments. Parameters may be arbitrary reals (including negative
// Jacobi/Laguerre parameters); no gamma-function normalization is applied,
// since only pointwise values up to overall normalization are needed.
namespace kg::specfun {

namespace detail {

template <class T>
void require_finite(const T& z) {
    if constexpr (std::is_same_v<T, std::complex<double>>) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::domain_error("specfun: non-finite argument");
    } else {
        if (!std::isfinite(z)) throw std::domain_error("specfun: non-finite argument");
    }
}

} // namespace detail

// Jacobi polynomial P_n^{(a,b)}(z), standard recurrence in n.
template <class T>
T jacobi_eval(int n, double a, double b, T z) {
    if (n < 0) throw std::invalid_argument("jacobi_eval: n < 0");
    detail::require_finite(z);
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("jacobi_eval: non-finite parameter");
    T p0(1.0);
    if (n == 0) return p0;
    T p1 = ((a + b + 2.0) * z + (a - b)) / 2.0;
    for (int k = 2; k <= n; ++k) {
        const double c0 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        const double c1 = 2.0 * k + a + b - 1.0;
        const double c2 = (2.0 * k + a + b) * (2.0 * k + a + b - 2.0);
        const double c3 = a * a - b * b;
        const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        T p2 = (c1 * (c2 * z + c3) * p1 - c4 * p0) / c0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// Generalized Laguerre polynomial L_n^{alpha}(z).
template <class T>
T laguerre_eval(int n, double alpha, T z) {
    if (n < 0) throw std::invalid_argument("laguerre_eval: n < 0");
    detail::require_finite(z);
    if (!std::isfinite(alpha)) throw std::domain_error("laguerre_eval: non-finite parameter");
    T p0(1.0);
    if (n == 0) return p0;
    T p1 = (1.0 + alpha) - z;
    for (int k = 2; k <= n; ++k) {
        T p2 = (((2.0 * k - 1.0 + alpha) - z) * p1 - (k - 1.0 + alpha) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// Physicists' Hermite polynomial H_n(z): H_{k+1} = 2 z H_k - 2 k H_{k-1}.
template <class T>
T hermite_eval(int n, T z) {
    if (n < 0) throw std::invalid_argument("hermite_eval: n < 0");
    detail::require_finite(z);
    T p0(1.0);
    if (n == 0) return p0;
    T p1 = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        T p2 = 2.0 * z * p1 - 2.0 * static_cast<double>(k) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace kg::specfun
