#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kgbound/models.hpp"

// Independent numerical verification: solve the energy-dependent eigenproblem
//   -psi'' + U_E(x) psi = lambda psi,   target lambda = E^2 - m^2
// self-consistently, with no shape-invariance input. Inner problem: standard
// second-order central-difference discretization with Dirichlet boundaries
// (symmetric tridiagonal), eigenvalues by Sturm-sequence bisection. Outer
// problem: bisection on g(E) = lambda_n(E) - (E^2 - m^2).
namespace kg::oracle {

struct OracleConfig {
    std::optional<double> half_width; // nullopt = AUTO (family rule below)
    int points = 6001;                // >= 101
    double bracket_halfwidth = 0.5;   // energy units around the seed
    double root_tol = 1e-8;           // outer bisection tolerance on E
    double marginal_threshold = 1e-2; // skip states with decay rate below this

    void validate() const; // throws std::invalid_argument
};

struct OracleResult {
    double energy = 0.0;
    double inner_eigenvalue = 0.0;
    int iterations = 0;
    bool converged = false;
    bool skipped_marginal = false;
    bool boundary_ok = true; // post-hoc WKB estimate |psi(boundary)| < 1e-8
};

// Thrown when g(E) has the same sign at both bracket ends.
struct BracketError : std::runtime_error {
    double e_lo, e_hi, g_lo, g_hi;
    BracketError(double el, double eh, double gl, double gh);
};

namespace detail {

// Number of eigenvalues of the symmetric tridiagonal (diag, constant offdiag)
// strictly below lambda, by the Sturm q-sequence.
int sturm_count_below(std::span<const double> diag, double offdiag, double lambda);

// k-th smallest eigenvalue (k >= 0) by bisection within Gershgorin bounds.
double kth_smallest_eigenvalue(std::span<const double> diag, double offdiag, int k);

// Discretization grid for the inner problem. AUTO domains (>= 8 decay
// lengths from closed-form seeds):
//   Tanh:   [-L, L], L = max(18, 8 / max(min(|s1|,|s2|), marginal_threshold))
//   Exp:    [-ln((A+n+16)/B), 25/max(sqrt|eps_seed|, 0.25)]
//   Linear: -B/A ± 12/sqrt(A)
// A user-set half_width w gives [center-w, center+w] with the family center
// (0 for Tanh, -B/A for Linear, the AUTO midpoint for Exp).
std::pair<double, double> oracle_domain(const BoundState& seed, const OracleConfig& cfg);

// Closed-form asymptotic decay rate used by the marginal-skip rule:
// Exp |A-n|; Tanh min(|s1|, |s2|); Linear sqrt(A).
double decay_rate(const BoundState& seed);

} // namespace detail

// (n+1)-th smallest eigenvalue of the discretized operator at frozen E.
// Throws std::domain_error when fewer than n+1 eigenvalues lie below the
// continuum edge (min of U(±inf) for Tanh, 0 for Exp; Linear is confining).
double nth_inner_eigenvalue(Family fam, const Couplings& c, double E_frozen, int n,
                            const OracleConfig& cfg);

// Root-find g(E) = lambda_n(E) - (E^2 - m^2) = 0 by bisection over
// seed_energy ± bracket_halfwidth. States whose closed-form decay rate is
// below marginal_threshold are reported skipped_marginal (not an error).
// Throws BracketError when g does not change sign.
OracleResult solve_selfconsistent(Family fam, const Couplings& c, int n, Branch sign,
                                  const OracleConfig& cfg, double seed_energy);

struct ComparisonRow {
    int n = 0;
    Branch sign = Branch::Plus;
    double closed_form_E = 0.0;
    double oracle_E = 0.0;
    double abs_diff = 0.0;
    bool skipped_marginal = false;
    bool bracket_failed = false;
    bool boundary_ok = true;
    std::string diagnostic; // bracket-failure g values, etc.
};

// One oracle solve per accepted state; bracket failures become per-row
// diagnostics, never aborts.
std::vector<ComparisonRow> compare_spectra(const SpectrumReport& report, const OracleConfig& cfg);

} // namespace kg::oracle
