#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "hillpt/oscillator.hpp"
#include "hillpt/scaled_real.hpp"

namespace hillpt {

// Real coefficient vector h_0..h_{n-1} of a truncated bound state, with the
// leading pair normalized to h_0 = cos(zeta), h_1 = sin(zeta).  No canonical
// branch is claimed for zeta beyond the first nonzero leading coefficient
// being positive.
struct WaveFunction {
    double energy = 0.0;
    double zeta = 0.0;  // in [0, 2 pi)
    Eigen::VectorXd coefficients;
    double s = 0.0;
    OscillatorParams params{};
};

WaveFunction extract_wavefunction(const OscillatorParams& p, Eigen::Index n, int level);

struct SeriesEvaluation {
    std::complex<double> sum;   // sum of h_n (i x)^n
    double tail_rel = 0.0;      // largest of the last 12 |h_n| |x|^n over |sum|
    double log_max_term = 0.0;  // natural log of the largest term magnitude
    double log_tail_max = 0.0;  // natural log of the largest tail term
};

SeriesEvaluation sum_series(const std::vector<ScaledReal>& h, std::complex<double> x);
SeriesEvaluation sum_series(const Eigen::VectorXd& h, std::complex<double> x);

inline constexpr double trust_tail_tol = 1e-9;

// psi(x) = exp(-s x^2) sum_n h_n (i x)^n; refuses (domain_error) when the
// truncated tail estimate exceeds trust_tail_tol of the partial sum.
std::complex<double> evaluate_psi(const WaveFunction& wf, std::complex<double> x);

// Largest real x (to ~1e-3) at which evaluate_psi still accepts.
double trust_radius(const WaveFunction& wf);

struct ShootingResult {
    double energy = 0.0;
    double zeta = 0.0;
    int steps = 0;
};

// Independent check on a level: damped 2d Newton on (E, zeta) drives the
// truncated series value at x_end (whose vanishing enforces both asymptotic
// ends at once, psi(-x) being the conjugate of psi(x) for real coefficients)
// below the roundoff noise floor 16 eps max|term|.
ShootingResult verify_by_shooting(const OscillatorParams& p, double e_guess, double zeta_guess,
                                  double x_end, int m);

}  // namespace hillpt
