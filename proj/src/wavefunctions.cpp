#include "kgbound/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kgbound/specfun.hpp"

namespace kg::wavefunctions {

void GridSpec::validate() const {
    if (!(std::isfinite(x_min) && std::isfinite(x_max)))
        throw std::invalid_argument("grid bounds must be finite");
    if (!(x_min < x_max)) throw std::invalid_argument("grid requires x_min < x_max");
    if (count < 3) throw std::invalid_argument("grid requires count >= 3");
}

namespace {

using cplx = std::complex<double>;

// 1 - tanh z = 2/(1 + e^{2z}) and 1 + tanh z = 2/(1 + e^{-2z}): free of the
// cancellation that destroys 1 - tanh x for x >~ 13. Asymptotic fallback
// avoids overflow of e^{±2z} for |Re z| > 350.
cplx one_minus_tanh(cplx z) {
    if (z.real() > 350.0) return 2.0 * std::exp(-2.0 * z);
    return 2.0 / (1.0 + std::exp(2.0 * z));
}

cplx one_plus_tanh(cplx z) {
    if (z.real() < -350.0) return 2.0 * std::exp(2.0 * z);
    return 2.0 / (1.0 + std::exp(-2.0 * z));
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

} // namespace

std::complex<double> eval_wavefunction(const BoundState& st, std::complex<double> z,
                                       bool* underflow) {
    if (!finite(z)) throw std::domain_error("eval_wavefunction: non-finite argument");
    switch (st.family) {
        case Family::Tanh: {
            const double s1 = st.tanh_shape->s1;
            const double s2 = st.tanh_shape->s2;
            const cplx v = std::pow(one_minus_tanh(z), 0.5 * s1) *
                           std::pow(one_plus_tanh(z), 0.5 * s2) *
                           specfun::jacobi_eval(st.n, s1, s2, std::tanh(z));
            if (!finite(v)) {
                if (underflow) *underflow = true;
                return 0.0;
            }
            return v;
        }
        case Family::Exp: {
            const cplx w = 2.0 * st.B * std::exp(-z);
            const double kappa = st.A - st.n;
            // log-magnitude estimate of w^{A-n} e^{-w/2} L_n(w); clamp deep
            // forbidden-region underflow/overflow products to 0.
            const double logmag =
                kappa * std::log(std::abs(w)) - 0.5 * w.real() + st.n * std::log1p(std::abs(w));
            if (logmag < -700.0) {
                if (underflow) *underflow = true;
                return 0.0;
            }
            const cplx v = std::pow(w, kappa) * std::exp(-0.5 * w) *
                           specfun::laguerre_eval(st.n, 2.0 * kappa, w);
            if (!finite(v)) {
                if (underflow) *underflow = true;
                return 0.0;
            }
            return v;
        }
        case Family::Linear: {
            const cplx y = std::sqrt(st.A) * (z + st.B / st.A);
            const cplx v = std::exp(-0.5 * y * y) * specfun::hermite_eval(st.n, y);
            if (!finite(v)) {
                if (underflow) *underflow = true;
                return 0.0;
            }
            return v;
        }
    }
    return 0.0;
}

GridSpec default_grid(const BoundState& st) {
    switch (st.family) {
        case Family::Tanh: return {-15.0, 15.0, 4001};
        case Family::Exp: {
            const double eps = models::epsilon_of(st);
            const double right = 20.0 / std::max(std::sqrt(std::abs(eps)), 0.3);
            return {-2.0 - std::log(std::max(st.B, 1.0)), right, 4001};
        }
        case Family::Linear: {
            const double c0 = -st.B / st.A;
            const double w = 10.0 / std::sqrt(st.A);
            return {c0 - w, c0 + w, 4001};
        }
    }
    return {-15.0, 15.0, 4001};
}

WavefunctionSamples sample(const BoundState& st, const GridSpec& grid, double shift) {
    grid.validate();
    WavefunctionSamples s;
    s.grid = grid;
    s.state = st;
    s.shift = shift;
    s.values.resize(grid.count);
    bool clamped = false;
    for (int i = 0; i < grid.count; ++i)
        s.values[i] = eval_wavefunction(st, {grid.x(i), -shift}, &clamped);
    s.underflow_clamped = clamped;
    return s;
}

WavefunctionSamples normalize(WavefunctionSamples s) {
    s.grid.validate();
    const double h = s.grid.h();
    double integral = 0.0;
    for (int i = 0; i < s.grid.count; ++i) {
        const double w = (i == 0 || i == s.grid.count - 1) ? 0.5 : 1.0;
        integral += w * std::norm(s.values[i]) * h;
    }
    if (!(integral > 0.0))
        throw std::domain_error("normalize: degenerate input (all-zero samples)");
    const double scale = 1.0 / std::sqrt(integral);
    for (auto& v : s.values) v *= scale;
    s.normalized = true;
    return s;
}

ResidualReport ode_residual(const BoundState& st, const GridSpec& grid) {
    grid.validate();
    const auto s = sample(st, grid);
    const double h = grid.h();
    const double eps = models::epsilon_of(st);
    double max_psi = 0.0;
    for (const auto& v : s.values) max_psi = std::max(max_psi, std::abs(v));
    if (!(max_psi > 0.0))
        throw std::domain_error("ode_residual: wavefunction vanishes on the whole grid");
    double worst = 0.0;
    for (int i = 1; i + 1 < grid.count; ++i) {
        const double U = models::effective_potential(st.family, st.couplings, st.energy, grid.x(i));
        const std::complex<double> r =
            -(s.values[i + 1] - 2.0 * s.values[i] + s.values[i - 1]) / (h * h) +
            (U - eps) * s.values[i];
        worst = std::max(worst, std::abs(r));
    }
    const double value = worst / max_psi;
    return {value, value > 1e-2};
}

int node_count(const WavefunctionSamples& s) {
    double max_psi = 0.0;
    for (const auto& v : s.values) max_psi = std::max(max_psi, std::abs(v));
    const double floor = 1e-8 * max_psi;
    int sgn = 0, count = 0;
    for (int i = 1; i + 1 < s.grid.count; ++i) {
        const double re = s.values[i].real();
        if (std::abs(re) <= floor) continue;
        const int here = re > 0.0 ? 1 : -1;
        if (sgn != 0 && here != sgn) ++count;
        sgn = here;
    }
    return count;
}

} // namespace kg::wavefunctions
