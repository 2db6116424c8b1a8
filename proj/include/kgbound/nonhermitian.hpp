#pragma once

#include <complex>

#include "kgbound/models.hpp"
#include "kgbound/wavefunctions.hpp"

// Complex-coordinate-shifted potentials U(x - ic): non-Hermitian and (for the
// Tanh family with m S0 + E V0 != 0) non-PT-symmetric, yet sharing the real
// spectrum of the unshifted problem. Verified here by PT-defect measurement
// and by residuals of the shifted equation evaluated at the UNSHIFTED real
// energies.
namespace kg::nonhermitian {

// Largest allowed |c| per family: tanh(x - ic) has poles at x = 0,
// c = ±pi/2, guarded with a 0.05 margin; Exp/Linear f are entire.
double pole_band_limit(Family fam);

// Throws std::domain_error when |c| is outside the family's pole-free band.
void require_pole_free(Family fam, double c_shift);

// U(x - ic) via complex evaluation of f; exactly real for c = 0.
std::complex<double> shifted_potential(Family fam, const Couplings& c, double E,
                                       double c_shift, double x);

// max over the grid of |U(x) - conj(U(-x))| for the shifted potential
// (imag_only restricts to the imaginary part of the difference). The grid
// must be symmetric about 0; throws std::invalid_argument otherwise.
double pt_defect(Family fam, const Couplings& c, double E, double c_shift,
                 const wavefunctions::GridSpec& grid, bool imag_only = false);

// max interior |-phi'' + (U(x-ic) - eps) phi| / max|phi| with
// phi(x) = psi(x - ic) and the UNSHIFTED real eps = E^2 - m^2. Equals
// wavefunctions::ode_residual exactly at c = 0.
wavefunctions::ResidualReport shifted_residual(const BoundState& st, double c_shift,
                                               const wavefunctions::GridSpec& grid);

// Grid for shifted-residual checks. Tanh/Linear: the family default grid.
// Exp: left edge clamped so B e^{-x_left} <= 3 when cos(c) < 0.2 (otherwise
// |e^{-w/2}| grows double-exponentially toward the left edge), right edge
// capped at x_left + 30; the residual check needs no boundary decay.
wavefunctions::GridSpec default_shift_grid(const BoundState& st, double c_shift);

} // namespace kg::nonhermitian
