#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "kgbound/specfun.hpp"

using kg::specfun::hermite_eval;
using kg::specfun::jacobi_eval;
using kg::specfun::laguerre_eval;

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

double pochhammer(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

// Independent oracle: hypergeometric series representation
//   P_n^{(a,b)}(z) = ((a+1)_n / n!) * sum_{k=0}^n [(-n)_k (n+a+b+1)_k / ((a+1)_k k!)] ((1-z)/2)^k
double jacobi_series(int n, double a, double b, double z) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += pochhammer(-n, k) * pochhammer(n + a + b + 1, k) /
               (pochhammer(a + 1, k) * factorial(k)) * std::pow(0.5 * (1.0 - z), k);
    }
    return pochhammer(a + 1, n) / factorial(n) * sum;
}

// Independent oracle: L_n^{alpha}(z) = sum_{k=0}^n (-1)^k C(n+alpha, n-k) z^k / k!
double laguerre_series(int n, double alpha, double z) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        double binom = 1.0; // C(n+alpha, n-k) via Pochhammer ratio
        for (int j = 0; j < n - k; ++j) binom *= (alpha + k + 1 + j) / (j + 1);
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(z, k) / factorial(k);
    }
    return sum;
}

// Independent oracle: explicit-sum physicists' Hermite polynomial
double hermite_series(int n, double z) {
    double sum = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        sum += ((k % 2 == 0) ? 1.0 : -1.0) / (factorial(k) * factorial(n - 2 * k)) *
               std::pow(2.0 * z, n - 2 * k);
    }
    return factorial(n) * sum;
}

} // namespace

TEST_SUITE("specfun") {
    TEST_CASE("jacobi: low orders match explicit polynomials") {
        CHECK(jacobi_eval(0, 0.7, -0.3, 0.42) == 1.0);
        // P_1^{(a,b)}(z) = (a - b)/2 + (a + b + 2) z / 2
        const double a = 1.3, b = 0.4, z = -0.73;
        CHECK(jacobi_eval(1, a, b, z) == doctest::Approx(0.5 * (a - b) + 0.5 * (a + b + 2) * z)
                                             .epsilon(1e-15));
        CHECK(jacobi_eval(2, 1.0, 1.0, 0.5) == doctest::Approx(0.1875).epsilon(1e-15));
    }

    TEST_CASE("jacobi: recurrence output matches series oracle") {
        // the alternating series oracle itself loses ~2 digits at n = 8, so
        // the comparison tolerance is looser than either evaluation alone
        const double params[][2] = {{0.5, 1.7}, {2.25, 0.03}, {3.1, 3.1}, {0.9, 4.2}};
        for (const auto& ab : params)
            for (int n = 0; n <= 8; ++n)
                for (double z : {-0.95, -0.4, 0.0, 0.31, 0.88}) {
                    const double got = jacobi_eval(n, ab[0], ab[1], z);
                    const double want = jacobi_series(n, ab[0], ab[1], z);
                    CHECK(std::abs(got - want) <= 5e-9 * std::max(1.0, std::abs(want)));
                }
    }

    TEST_CASE("jacobi: symmetry P_n^{(a,b)}(-z) = (-1)^n P_n^{(b,a)}(z)") {
        for (int n = 0; n <= 6; ++n)
            for (double z : {0.2, 0.75}) {
                const double lhs = jacobi_eval(n, 1.8, 0.6, -z);
                const double rhs = ((n % 2 == 0) ? 1.0 : -1.0) * jacobi_eval(n, 0.6, 1.8, z);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
            }
    }

    TEST_CASE("laguerre: values match series oracle") {
        CHECK(laguerre_eval(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
        for (double alpha : {0.0, 0.5, 2.3, 7.0})
            for (int n = 0; n <= 8; ++n)
                for (double z : {0.0, 0.4, 1.9, 6.5}) {
                    const double got = laguerre_eval(n, alpha, z);
                    const double want = laguerre_series(n, alpha, z);
                    CHECK(got == doctest::Approx(want).epsilon(1e-11));
                }
    }

    TEST_CASE("hermite: values match series oracle") {
        CHECK(hermite_eval(3, 1.0) == doctest::Approx(-4.0).epsilon(1e-15));
        for (int n = 0; n <= 10; ++n)
            for (double z : {-2.5, -0.3, 0.0, 0.8, 3.1}) {
                const double got = hermite_eval(n, z);
                const double want = hermite_series(n, z);
                CHECK(got == doctest::Approx(want).epsilon(1e-11));
            }
    }

    TEST_CASE("complex arguments on the real axis agree bitwise with real evaluation") {
        using C = std::complex<double>;
        for (int n = 0; n <= 5; ++n) {
            const double z = 0.37;
            CHECK(jacobi_eval(n, 1.2, 0.7, C(z, 0.0)).real() == jacobi_eval(n, 1.2, 0.7, z));
            CHECK(jacobi_eval(n, 1.2, 0.7, C(z, 0.0)).imag() == 0.0);
            CHECK(laguerre_eval(n, 0.8, C(z, 0.0)).real() == laguerre_eval(n, 0.8, z));
            CHECK(hermite_eval(n, C(z, 0.0)).real() == hermite_eval(n, z));
        }
    }

    TEST_CASE("complex off-axis values are finite and conjugate-symmetric") {
        using C = std::complex<double>;
        const C z{0.4, -0.3};
        for (int n = 1; n <= 6; ++n) {
            const C a = jacobi_eval(n, 2.0, 1.5, z);
            const C b = jacobi_eval(n, 2.0, 1.5, std::conj(z));
            CHECK(std::abs(a - std::conj(b)) < 1e-13 * std::max(1.0, std::abs(a)));
            CHECK(std::isfinite(hermite_eval(n, z).real()));
            CHECK(std::isfinite(laguerre_eval(n, 1.0, z).imag()));
        }
    }

    TEST_CASE("input guards") {
        CHECK_THROWS_AS(jacobi_eval(-1, 1.0, 1.0, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(laguerre_eval(-2, 0.0, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(hermite_eval(-3, 0.5), std::invalid_argument);
        const double nan = std::nan("");
        CHECK_THROWS_AS(jacobi_eval(2, 1.0, 1.0, nan), std::domain_error);
        CHECK_THROWS_AS(hermite_eval(2, nan), std::domain_error);
    }
}
