#pragma once

#include <complex>
#include <vector>

#include "kgbound/models.hpp"

// Closed-form eigenfunctions on grids: evaluation (real or complex argument),
// trapezoid L2 normalization, central-difference ODE residual, node counting.
namespace kg::wavefunctions {

struct GridSpec {
    double x_min;
    double x_max;
    int count; // >= 3, uniform spacing

    double h() const { return (x_max - x_min) / (count - 1); }
    double x(int i) const { return x_min + i * h(); }
    void validate() const; // throws std::invalid_argument
};

struct WavefunctionSamples {
    GridSpec grid;
    std::vector<std::complex<double>> values; // length = grid.count
    BoundState state;
    bool normalized = false;
    bool underflow_clamped = false; // some tail points clamped to 0
    double shift = 0.0;             // values are psi(x - i*shift)
};

// Unnormalized closed-form value at z (principal branches for non-integer
// powers):
//   Tanh:   (1 - tanh z)^{s1/2} (1 + tanh z)^{s2/2} P_n^{(s1,s2)}(tanh z)
//   Exp:    w^{A-n} e^{-w/2} L_n^{2A-2n}(w),  w = 2 B e^{-z}
//   Linear: e^{-y^2/2} H_n(y),                y = sqrt(A) (z + B/A)
// 1 ∓ tanh z are computed as 2/(1 + e^{±2z}) to avoid cancellation at large
// |Re z|. Values whose log-magnitude underflows the double range (deep
// forbidden region, Exp family at very negative x) are clamped to 0 and
// reported through *underflow.
std::complex<double> eval_wavefunction(const BoundState& st, std::complex<double> z,
                                       bool* underflow = nullptr);

// Family default grid (4001 points): Tanh [-15, 15];
// Exp [-2 - ln(max(B,1)), 20/max(sqrt|eps|, 0.3)]; Linear -B/A ± 10/sqrt(A).
GridSpec default_grid(const BoundState& st);

// Sample psi(x - i*shift) over the grid.
WavefunctionSamples sample(const BoundState& st, const GridSpec& grid, double shift = 0.0);

// Rescale so the trapezoid integral of |psi|^2 is 1. Throws std::domain_error
// on all-zero input. Idempotent.
WavefunctionSamples normalize(WavefunctionSamples s);

struct ResidualReport {
    double value;                   // max interior |-psi'' + (U - eps) psi| / max|psi|
    bool coarse_grid_warning;       // set when value > 1e-2: h^2 truncation
                                    // dominates and the check is unreliable
};

// Central-difference residual of the reduced equation on the grid; O(h^2)
// for a true eigenfunction.
ResidualReport ode_residual(const BoundState& st, const GridSpec& grid);

// Strict sign changes of Re(psi) over interior points, ignoring values below
// the noise floor 1e-8 * max|psi|.
int node_count(const WavefunctionSamples& s);

} // namespace kg::wavefunctions
