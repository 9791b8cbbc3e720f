#pragma once

#include <utility>
#include <vector>

#include "hillpt/oscillator.hpp"
#include "hillpt/scaled_real.hpp"

namespace hillpt {

enum class SeriesKind { General, Sigma, Omega };

// Taylor coefficients h_0 .. h_{n_max} of psi(x) = exp(-s x^2) sum_n h_n (ix)^n
// at a fixed trial energy.  Any solution is h_0 * sigma + h_1 * omega where
// sigma starts from (1, 0) and omega from (0, 1).
struct TaylorCoefficients {
    std::vector<ScaledReal> values;
    SeriesKind kind = SeriesKind::General;
    double h0 = 0.0;
    double h1 = 0.0;
    double energy = 0.0;
    OscillatorParams params{};
};

TaylorCoefficients generate_coefficients(const OscillatorParams& p, double energy,
                                         double h0, double h1, int n_max);

std::pair<TaylorCoefficients, TaylorCoefficients> sigma_omega(const OscillatorParams& p,
                                                              double energy, int n_max);

// Largest row residual of the recurrence, each row scaled by its largest
// participating term; exact coefficient sequences give ~1e-16, anything above
// 1e-10 indicates a corrupted sequence.
double recurrence_residual(const TaylorCoefficients& tc);

}  // namespace hillpt
