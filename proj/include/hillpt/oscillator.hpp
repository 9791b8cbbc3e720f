#pragma once

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hillpt {

// Couplings of V(x) = x^4 + i*beta*x^3 + c*x^2 + i*delta*x together with the
// Gaussian screening exponent s of the ansatz psi(x) = exp(-s x^2) * sum_n h_n (ix)^n.
template <typename Scalar>
struct OscillatorParamsT {
    Scalar beta;
    Scalar c;
    Scalar delta;
    Scalar s;
};

using OscillatorParams = OscillatorParamsT<double>;

inline void validate_params(const OscillatorParams& p) {
    if (!(std::isfinite(p.beta) && std::isfinite(p.c) && std::isfinite(p.delta) && std::isfinite(p.s)))
        throw std::invalid_argument("oscillator params must be finite");
    if (!(p.s > 0.0))
        throw std::invalid_argument("screening exponent s must be positive, got s = " + std::to_string(p.s));
}

// Coefficients of the six-term recurrence satisfied by the Taylor coefficients h_n:
//   a_n h_{n+2} + c_n h_n + delta h_{n-1} + theta h_{n-2} - beta h_{n-3} + h_{n-4} = 0
// with a_n = (n+1)(n+2), c_n = 4 s n + 2 s - E, theta = 4 s^2 - c.
template <typename Scalar>
Scalar super_coeff(Eigen::Index n) {
    return Scalar((n + 1) * (n + 2));
}

template <typename Scalar>
Scalar diag_coeff(const OscillatorParamsT<Scalar>& p, const Scalar& energy, Eigen::Index n) {
    return p.s * Scalar(4 * n + 2) - energy;
}

template <typename Scalar>
Scalar theta_coeff(const OscillatorParamsT<Scalar>& p) {
    return Scalar(4) * p.s * p.s - p.c;
}

struct RecurrenceCoefficients {
    double a_n;
    double c_n;
    double theta;
};

inline RecurrenceCoefficients recurrence_coeffs(const OscillatorParams& p, double energy, Eigen::Index n) {
    validate_params(p);
    if (n < 0)
        throw std::invalid_argument("recurrence index must be nonnegative");
    return {super_coeff<double>(n), diag_coeff(p, energy, n), theta_coeff(p)};
}

// Entry (row, col) of the infinite linear system whose row n expresses the
// recurrence above acting on the coefficient vector (h_0, h_1, h_2, ...).
// The energy sits only on the diagonal through c_n.
template <typename Scalar>
Scalar band_entry(const OscillatorParamsT<Scalar>& p, const Scalar& energy, Eigen::Index row, Eigen::Index col) {
    const Eigen::Index off = col - row;
    switch (off) {
        case 2: return super_coeff<Scalar>(row);
        case 0: return diag_coeff(p, energy, row);
        case -1: return p.delta;
        case -2: return theta_coeff(p);
        case -3: return -p.beta;
        case -4: return Scalar(1);
        default: return Scalar(0);
    }
}

// Large-n behaviour: h_n ~ lambda^n g_n / (3^{n/3} Gamma(1 + n/3)) with six
// characteristic roots lambda(p) = exp(i (2p - 1) pi / 6), p = 1..6, and
// envelope growth g_n = exp(gamma n^{2/3} + O(n^{1/3})) where
// gamma(p) = s lambda^4(p) - beta lambda(p) / 4.  Which p dominate the tail
// depends on the sign of 4 sqrt(3) s - |beta|.
enum class DominanceRegime {
    AboveThreshold,             // s > |beta| / (4 sqrt(3)); roots {2, 5} dominate
    BelowThresholdBetaPositive, // roots {3, 4} dominate
    BelowThresholdBetaNegative, // roots {1, 6} dominate
    Degenerate,                 // beta = 0 or s at the threshold: ties
};

struct DominanceClass {
    double threshold;               // |beta| / (4 sqrt(3))
    DominanceRegime regime;
    std::set<int> dominant_p;       // maximizers of Re gamma(p) among p = 1..6
    std::array<double, 6> re_gamma; // Re gamma(p) at index p - 1
};

inline DominanceClass classify_dominance(const OscillatorParams& p) {
    validate_params(p);
    const double root3 = std::sqrt(3.0);
    DominanceClass d;
    d.threshold = std::abs(p.beta) / (4.0 * root3);
    const double edge = root3 / 8.0 * p.beta;
    d.re_gamma = {-edge - p.s / 2.0, p.s, edge - p.s / 2.0,
                  edge - p.s / 2.0, p.s, -edge - p.s / 2.0};

    const double lhs = 4.0 * root3 * p.s;
    const double rhs = std::abs(p.beta);
    const bool at_threshold = std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs);
    if (p.beta == 0.0) {
        d.regime = DominanceRegime::Degenerate;
        d.dominant_p = {1, 2, 3, 4, 5, 6};
    } else if (at_threshold) {
        d.regime = DominanceRegime::Degenerate;
        d.dominant_p = p.beta > 0.0 ? std::set<int>{2, 3, 4, 5} : std::set<int>{1, 2, 5, 6};
    } else if (p.s > d.threshold) {
        d.regime = DominanceRegime::AboveThreshold;
        d.dominant_p = {2, 5};
    } else if (p.beta > 0.0) {
        d.regime = DominanceRegime::BelowThresholdBetaPositive;
        d.dominant_p = {3, 4};
    } else {
        d.regime = DominanceRegime::BelowThresholdBetaNegative;
        d.dominant_p = {1, 6};
    }
    return d;
}

}  // namespace hillpt
