#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

// The three shape-invariant potential families of the (1+1)-d Klein-Gordon
// problem with matched scalar/vector couplings S = S0 f(x), V = V0 f(x):
//   Tanh:   f(x) = tanh x
//   Exp:    f(x) = -exp(-x)
//   Linear: f(x) = x/2
// The reduced equation is -psi'' + U(x) psi = eps psi with
//   U(x) = (S0^2 - V0^2) f^2 + 2 (m S0 + E V0) f,   eps = E^2 - m^2,
// which is self-consistent in E through B(E) = m S0 + E V0.
namespace kg {

enum class Family { Tanh, Exp, Linear };
enum class Branch { Plus, Minus };

enum class RejectReason {
    NoRealRoot,        // quadratic discriminant < 0 (absence of the level)
    S1NonPositive,     // tanh family: s1 <= 0
    S2NonPositive,     // tanh family: s2 <= 0
    ANonPositive,      // exp family: A - n <= 0
    LevelBoundExceeded // branch scan stopped by the n_max_scan safety cap
};

std::string to_string(Family f);
std::string to_string(Branch b);
std::string to_string(RejectReason r);
std::optional<Family> family_from_string(const std::string& s);
std::optional<Branch> branch_from_string(const std::string& s);

struct Couplings {
    double m;  // rest mass, > 0
    double s0; // scalar coupling
    double v0; // vector coupling; discrete spectra require s0^2 > v0^2
};

struct TanhShape {
    double s1; // (A-n) + B/(A-n), must be > 0 for an acceptable level
    double s2; // (A-n) - B/(A-n), must be > 0 for an acceptable level
};

struct ExpShape {
    double a_pm; // A at this branch's energy; A - n > 0 required
};

// One solved level. A and B are the superpotential parameters evaluated at
// this level's energy (B = m S0 + E V0 for Tanh; A = B_c/B - 1/2 for Exp with
// B = sqrt(S0^2 - V0^2); A = sqrt(S0^2 - V0^2)/2, B = B_c/(2A) for Linear).
struct BoundState {
    Family family;
    int n;
    Branch sign;
    double energy;
    double A;
    double B;
    std::optional<TanhShape> tanh_shape;
    std::optional<ExpShape> exp_shape;
    double level_bound; // informational level-count bound: A - sqrt(|B|)
                        // (Tanh), A (Exp), +inf (Linear)
    Couplings couplings;
};

struct Rejection {
    int n;
    Branch sign;
    RejectReason reason;
};

struct SpectrumReport {
    Family family;
    Couplings couplings;
    std::vector<BoundState> accepted;
    std::vector<Rejection> rejected;
};

namespace models {

// Throws std::invalid_argument unless m > 0 and s0^2 > v0^2.
void require_discrete(const Couplings& c);

// f(x) per family, real and complex arguments.
double family_f(Family fam, double x);
std::complex<double> family_f(Family fam, std::complex<double> z);

// U(x) = (S0^2 - V0^2) f^2 + 2 (m S0 + E V0) f  (raw form; the single
// self-consistency target is eps = E^2 - m^2 for all families).
double effective_potential(Family fam, const Couplings& c, double E, double x);

// W(x; A, B): Tanh A tanh x + B/A; Exp A - B e^{-x}; Linear A x + B.
// Throws std::domain_error for Tanh with A == 0.
double superpotential_W(Family fam, double A, double B, double x);
std::complex<double> superpotential_W(Family fam, double A, double B, std::complex<double> z);

// Shape-invariance remainder R(a_i), i >= 1, with a_i = A - i + 1 for Tanh
// and Exp and a_i = A for Linear:
//   Tanh:   [(A-i+1)^2 - (A-i)^2] + B^2 [1/(A-i+1)^2 - 1/(A-i)^2]
//   Exp:    (A-i+1)^2 - (A-i)^2
//   Linear: 2A
// Partial sums reproduce eps_n - eps_0 at fixed (A, B).
double remainder_R(Family fam, double A, double B, int i);

// Solve the closed-form level quadratic for (n, branch); empty when the
// discriminant is negative. Shape extras are computed from the branch's own
// energy. Throws std::invalid_argument on bad couplings or n < 0.
std::optional<BoundState> solve_level(Family fam, const Couplings& c, int n, Branch sign);

// Acceptability filter: the reason a solved level is rejected, or nullopt if
// acceptable. The conditions (Tanh: s1 > 0 and s2 > 0; Exp: A - n > 0;
// Linear: always) apply to the level row, i.e. to BOTH branches' shape
// parameters at once — a level exists only when the plus and minus
// wavefunctions are both normalizable. Strict > 0, no epsilon slack.
std::optional<RejectReason> acceptability(const BoundState& st);

// Scan n = 0 .. n_max_scan-1 per branch, applying the acceptability filter;
// a branch stops at the first rejection after at least one acceptance. If a
// branch is still accepting at the cap, a (n_max_scan, LevelBoundExceeded)
// rejection records that the scan was cut off by the cap.
SpectrumReport enumerate_spectrum(Family fam, const Couplings& c, int n_max_scan = 64);

// max over the grid of |U+(x; a1) - U-(x; a2) - R(a1)| with U± = W^2 ± W'
// evaluated analytically (a1 = A, a2 = A - 1 for Tanh/Exp; a2 = a1 for
// Linear). An exact algebraic identity: expect ~1e-13.
double shape_invariance_defect(Family fam, double A, double B, std::span<const double> xs);

// Same identity at complex coordinates z = x - i c (pole-free shifts only).
double shape_invariance_defect_shifted(Family fam, double A, double B, double c_shift,
                                       std::span<const double> xs);

// eps = E^2 - m^2 (the uniform target).
double epsilon_of(const BoundState& st);

// Family closed-form eps: Tanh S0^2 - V0^2 - (A-n)^2 - B^2/(A-n)^2;
// Exp -(A-n)^2; Linear (2n+1)A - B^2. Agrees with epsilon_of to ~1e-15 rel.
double epsilon_closed_form(const BoundState& st);

} // namespace models
} // namespace kg
