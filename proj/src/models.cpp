#include "kgbound/models.hpp"

#include <cmath>
#include <stdexcept>

namespace kg {

std::string to_string(Family f) {
    switch (f) {
        case Family::Tanh: return "tanh";
        case Family::Exp: return "exp";
        case Family::Linear: return "linear";
    }
    return "?";
}

std::string to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::NoRealRoot: return "NoRealRoot";
        case RejectReason::S1NonPositive: return "S1NonPositive";
        case RejectReason::S2NonPositive: return "S2NonPositive";
        case RejectReason::ANonPositive: return "ANonPositive";
        case RejectReason::LevelBoundExceeded: return "LevelBoundExceeded";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "tanh") return Family::Tanh;
    if (s == "exp") return Family::Exp;
    if (s == "linear") return Family::Linear;
    return std::nullopt;
}

std::optional<Branch> branch_from_string(const std::string& s) {
    if (s == "plus" || s == "+") return Branch::Plus;
    if (s == "minus" || s == "-") return Branch::Minus;
    return std::nullopt;
}

namespace models {

void require_discrete(const Couplings& c) {
    if (!(std::isfinite(c.m) && std::isfinite(c.s0) && std::isfinite(c.v0)))
        throw std::invalid_argument("couplings must be finite");
    if (!(c.m > 0.0)) throw std::invalid_argument("mass m must be > 0");
    if (!(c.s0 * c.s0 > c.v0 * c.v0))
        throw std::invalid_argument("discrete spectra require S0^2 > V0^2");
}

double family_f(Family fam, double x) {
    switch (fam) {
        case Family::Tanh: return std::tanh(x);
        case Family::Exp: return -std::exp(-x);
        case Family::Linear: return 0.5 * x;
    }
    return 0.0;
}

std::complex<double> family_f(Family fam, std::complex<double> z) {
    switch (fam) {
        case Family::Tanh: return std::tanh(z);
        case Family::Exp: return -std::exp(-z);
        case Family::Linear: return 0.5 * z;
    }
    return {};
}

double effective_potential(Family fam, const Couplings& c, double E, double x) {
    if (!std::isfinite(x)) throw std::domain_error("effective_potential: non-finite x");
    const double f = family_f(fam, x);
    return (c.s0 * c.s0 - c.v0 * c.v0) * f * f + 2.0 * (c.m * c.s0 + E * c.v0) * f;
}

double superpotential_W(Family fam, double A, double B, double x) {
    switch (fam) {
        case Family::Tanh:
            if (A == 0.0) throw std::domain_error("superpotential_W: tanh family requires A != 0");
            return A * std::tanh(x) + B / A;
        case Family::Exp: return A - B * std::exp(-x);
        case Family::Linear: return A * x + B;
    }
    return 0.0;
}

std::complex<double> superpotential_W(Family fam, double A, double B, std::complex<double> z) {
    switch (fam) {
        case Family::Tanh:
            if (A == 0.0) throw std::domain_error("superpotential_W: tanh family requires A != 0");
            return A * std::tanh(z) + B / A;
        case Family::Exp: return A - B * std::exp(-z);
        case Family::Linear: return A * z + B;
    }
    return {};
}

double remainder_R(Family fam, double A, double B, int i) {
    if (i < 1) throw std::invalid_argument("remainder_R: i must be >= 1");
    const double ai = A - i + 1; // a_i
    const double an = A - i;     // a_{i+1}
    switch (fam) {
        case Family::Tanh:
            return (ai * ai - an * an) + B * B * (1.0 / (ai * ai) - 1.0 / (an * an));
        case Family::Exp: return ai * ai - an * an;
        case Family::Linear: return 2.0 * A;
    }
    return 0.0;
}

namespace {

// Roots of P E^2 + Q E + R0 = 0 (P > 0) as (plus_root, minus_root) of the
// formula (-Q ± sqrt(Q^2 - 4 P R0)) / (2P), computed with the product trick
// to avoid cancellation. Empty when the discriminant is negative.
std::optional<std::pair<double, double>> quadratic_roots(double P, double Q, double R0) {
    if (!(P > 0.0)) return std::nullopt;
    const double disc = Q * Q - 4.0 * P * R0;
    if (!(disc >= 0.0)) return std::nullopt;
    const double sq = std::sqrt(disc);
    double rp, rm;
    if (Q >= 0.0) {
        rm = (-Q - sq) / (2.0 * P);
        rp = (rm != 0.0) ? R0 / (P * rm) : (-Q + sq) / (2.0 * P);
    } else {
        rp = (-Q + sq) / (2.0 * P);
        rm = (rp != 0.0) ? R0 / (P * rp) : (-Q - sq) / (2.0 * P);
    }
    return std::make_pair(rp, rm);
}

double tanh_A(const Couplings& c) {
    const double d = c.s0 * c.s0 - c.v0 * c.v0;
    return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * d));
}

} // namespace

std::optional<BoundState> solve_level(Family fam, const Couplings& c, int n, Branch sign) {
    require_discrete(c);
    if (n < 0) throw std::invalid_argument("solve_level: n must be >= 0");

    const double d = c.s0 * c.s0 - c.v0 * c.v0;
    double P = 0.0, Q = 0.0, R0 = 0.0;
    switch (fam) {
        case Family::Tanh: {
            const double a = tanh_A(c) - n;
            P = a * a + c.v0 * c.v0;
            Q = 2.0 * c.m * c.s0 * c.v0;
            R0 = a * a * a * a + c.m * c.m * c.s0 * c.s0 - a * a * (c.m * c.m + d);
            break;
        }
        case Family::Exp: {
            const double B = std::sqrt(d);
            const double np = n + 0.5;
            P = c.s0 * c.s0;
            Q = 2.0 * c.m * c.s0 * c.v0 - 2.0 * np * c.v0 * B;
            R0 = np * np * d + c.m * c.m * c.v0 * c.v0 - 2.0 * np * c.m * c.s0 * B;
            break;
        }
        case Family::Linear: {
            P = c.s0 * c.s0;
            Q = 2.0 * c.m * c.s0 * c.v0;
            R0 = -(std::pow(d, 1.5) * (n + 0.5) - c.m * c.m * c.v0 * c.v0);
            break;
        }
    }

    const auto roots = quadratic_roots(P, Q, R0);
    if (!roots) return std::nullopt;
    const double E = (sign == Branch::Plus) ? roots->first : roots->second;
    const double Bc = c.m * c.s0 + E * c.v0;

    BoundState st;
    st.family = fam;
    st.n = n;
    st.sign = sign;
    st.energy = E;
    st.couplings = c;
    switch (fam) {
        case Family::Tanh: {
            st.A = tanh_A(c);
            st.B = Bc;
            const double a = st.A - n;
            st.tanh_shape = TanhShape{a + st.B / a, a - st.B / a};
            st.level_bound = st.A - std::sqrt(std::abs(st.B));
            break;
        }
        case Family::Exp: {
            st.B = std::sqrt(d);
            st.A = Bc / st.B - 0.5;
            st.exp_shape = ExpShape{st.A};
            st.level_bound = st.A;
            break;
        }
        case Family::Linear: {
            st.A = 0.5 * std::sqrt(d);
            st.B = Bc / std::sqrt(d);
            st.level_bound = std::numeric_limits<double>::infinity();
            break;
        }
    }
    return st;
}

std::optional<RejectReason> acceptability(const BoundState& st) {
    // Acceptability is a property of the level row: the s1/s2 (Tanh) and
    // A - n (Exp) conditions must hold on BOTH energy branches, each with its
    // own B(E). The branches share one quadratic, so the partner always
    // exists whenever st does. Own-branch quantities are checked first so
    // the recorded reason names the branch's own failure when there is one.
    if (st.family == Family::Linear) return std::nullopt;
    const Branch partner_sign = (st.sign == Branch::Plus) ? Branch::Minus : Branch::Plus;
    const auto partner = solve_level(st.family, st.couplings, st.n, partner_sign);
    switch (st.family) {
        case Family::Tanh:
            if (!(st.tanh_shape->s1 > 0.0)) return RejectReason::S1NonPositive;
            if (!(st.tanh_shape->s2 > 0.0)) return RejectReason::S2NonPositive;
            if (partner) {
                if (!(partner->tanh_shape->s1 > 0.0)) return RejectReason::S1NonPositive;
                if (!(partner->tanh_shape->s2 > 0.0)) return RejectReason::S2NonPositive;
            }
            return std::nullopt;
        case Family::Exp:
            if (!(st.exp_shape->a_pm - st.n > 0.0)) return RejectReason::ANonPositive;
            if (partner && !(partner->exp_shape->a_pm - st.n > 0.0))
                return RejectReason::ANonPositive;
            return std::nullopt;
        default: return std::nullopt;
    }
}

SpectrumReport enumerate_spectrum(Family fam, const Couplings& c, int n_max_scan) {
    require_discrete(c);
    if (n_max_scan < 0) throw std::invalid_argument("enumerate_spectrum: n_max_scan must be >= 0");

    SpectrumReport rep;
    rep.family = fam;
    rep.couplings = c;
    for (Branch sign : {Branch::Plus, Branch::Minus}) {
        bool any_accepted = false;
        bool stopped = false;
        for (int n = 0; n < n_max_scan; ++n) {
            const auto st = solve_level(fam, c, n, sign);
            std::optional<RejectReason> reason;
            if (!st)
                reason = RejectReason::NoRealRoot;
            else
                reason = acceptability(*st);
            if (reason) {
                rep.rejected.push_back({n, sign, *reason});
                if (any_accepted) {
                    stopped = true;
                    break;
                }
            } else {
                rep.accepted.push_back(*st);
                any_accepted = true;
            }
        }
        if (!stopped && n_max_scan > 0)
            rep.rejected.push_back({n_max_scan, sign, RejectReason::LevelBoundExceeded});
    }
    return rep;
}

namespace {

template <class T>
double defect_over(Family fam, double A, double B, std::span<const double> xs,
                   auto&& to_coord) {
    if (xs.empty()) throw std::invalid_argument("shape_invariance_defect: empty grid");
    const double A2 = (fam == Family::Linear) ? A : A - 1.0;
    const double R1 = remainder_R(fam, A, B, 1);
    double worst = 0.0;
    for (double x : xs) {
        const T z = to_coord(x);
        T w1{}, w1p{}, w2{}, w2p{};
        switch (fam) {
            case Family::Tanh: {
                const T t = std::tanh(z);
                w1 = A * t + B / A;
                w1p = A * (1.0 - t * t);
                w2 = A2 * t + B / A2;
                w2p = A2 * (1.0 - t * t);
                break;
            }
            case Family::Exp: {
                const T e = std::exp(-z);
                w1 = A - B * e;
                w1p = B * e;
                w2 = A2 - B * e;
                w2p = w1p;
                break;
            }
            case Family::Linear: {
                w1 = A * z + B;
                w1p = T(A);
                w2 = w1;
                w2p = w1p;
                break;
            }
        }
        const T defect = (w1 * w1 + w1p) - (w2 * w2 - w2p) - R1;
        worst = std::max(worst, std::abs(defect));
    }
    return worst;
}

} // namespace

double shape_invariance_defect(Family fam, double A, double B, std::span<const double> xs) {
    return defect_over<double>(fam, A, B, xs, [](double x) { return x; });
}

double shape_invariance_defect_shifted(Family fam, double A, double B, double c_shift,
                                       std::span<const double> xs) {
    return defect_over<std::complex<double>>(
        fam, A, B, xs, [c_shift](double x) { return std::complex<double>(x, -c_shift); });
}

double epsilon_of(const BoundState& st) {
    return st.energy * st.energy - st.couplings.m * st.couplings.m;
}

double epsilon_closed_form(const BoundState& st) {
    const Couplings& c = st.couplings;
    const double d = c.s0 * c.s0 - c.v0 * c.v0;
    switch (st.family) {
        case Family::Tanh: {
            const double a = st.A - st.n;
            return d - a * a - st.B * st.B / (a * a);
        }
        case Family::Exp: {
            const double a = st.A - st.n;
            return -a * a;
        }
        case Family::Linear: return (2.0 * st.n + 1.0) * st.A - st.B * st.B;
    }
    return 0.0;
}

} // namespace models
} // namespace kg
