#include "kgbound/nonhermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kg::nonhermitian {

double pole_band_limit(Family fam) {
    if (fam == Family::Tanh) return std::numbers::pi / 2.0 - 0.05;
    return std::numeric_limits<double>::infinity();
}

void require_pole_free(Family fam, double c_shift) {
    if (!std::isfinite(c_shift)) throw std::domain_error("shift must be finite");
    if (std::abs(c_shift) >= pole_band_limit(fam))
        throw std::domain_error("shift outside the tanh family's pole-free band |c| < pi/2 - 0.05");
}

std::complex<double> shifted_potential(Family fam, const Couplings& c, double E,
                                       double c_shift, double x) {
    require_pole_free(fam, c_shift);
    if (!std::isfinite(x)) throw std::domain_error("shifted_potential: non-finite x");
    const std::complex<double> f = models::family_f(fam, {x, -c_shift});
    return (c.s0 * c.s0 - c.v0 * c.v0) * f * f + 2.0 * (c.m * c.s0 + E * c.v0) * f;
}

double pt_defect(Family fam, const Couplings& c, double E, double c_shift,
                 const wavefunctions::GridSpec& grid, bool imag_only) {
    require_pole_free(fam, c_shift);
    grid.validate();
    if (std::abs(grid.x_min + grid.x_max) > 1e-12 * (grid.x_max - grid.x_min))
        throw std::invalid_argument("pt_defect: grid must be symmetric about 0");
    std::vector<std::complex<double>> u(grid.count);
    for (int i = 0; i < grid.count; ++i) u[i] = shifted_potential(fam, c, E, c_shift, grid.x(i));
    double worst = 0.0;
    for (int i = 0; i < grid.count; ++i) {
        const std::complex<double> diff = u[i] - std::conj(u[grid.count - 1 - i]);
        worst = std::max(worst, imag_only ? std::abs(diff.imag()) : std::abs(diff));
    }
    return worst;
}

wavefunctions::ResidualReport shifted_residual(const BoundState& st, double c_shift,
                                               const wavefunctions::GridSpec& grid) {
    require_pole_free(st.family, c_shift);
    if (c_shift == 0.0) return wavefunctions::ode_residual(st, grid);
    grid.validate();
    const auto s = wavefunctions::sample(st, grid, c_shift);
    const double h = grid.h();
    const double eps = models::epsilon_of(st);
    double max_phi = 0.0;
    for (const auto& v : s.values) max_phi = std::max(max_phi, std::abs(v));
    if (!(max_phi > 0.0))
        throw std::domain_error("shifted_residual: wavefunction vanishes on the whole grid");
    double worst = 0.0;
    for (int i = 1; i + 1 < grid.count; ++i) {
        const std::complex<double> U =
            shifted_potential(st.family, st.couplings, st.energy, c_shift, grid.x(i));
        const std::complex<double> r =
            -(s.values[i + 1] - 2.0 * s.values[i] + s.values[i - 1]) / (h * h) +
            (U - eps) * s.values[i];
        worst = std::max(worst, std::abs(r));
    }
    const double value = worst / max_phi;
    return {value, value > 1e-2};
}

wavefunctions::GridSpec default_shift_grid(const BoundState& st, double c_shift) {
    auto grid = wavefunctions::default_grid(st);
    if (st.family == Family::Exp && std::cos(c_shift) < 0.2)
        grid.x_min = std::max(grid.x_min, std::log(st.B / 3.0));
    if (st.family == Family::Exp) grid.x_max = std::min(grid.x_max, grid.x_min + 30.0);
    return grid;
}

} // namespace kg::nonhermitian
