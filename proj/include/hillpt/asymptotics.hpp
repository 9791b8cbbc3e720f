#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hillpt/oscillator.hpp"
#include "hillpt/series.hpp"

namespace hillpt {

// y_n = ln|g_n| = ln|h_n| + (n/3) ln 3 + ln Gamma(1 + n/3); NaN marks a
// vanished coefficient.  The lambda beats have period 12 in n, so envelopes
// are taken as maxima over blocks of 12.
std::vector<double> extract_g_sequence(const TaylorCoefficients& tc);

struct GrowthAnalysis {
    int window_lo = 0;
    int window_hi = 0;
    double fitted_gamma = 0.0;       // coefficient of n^{2/3}
    double fitted_subleading = 0.0;  // coefficient of n^{1/3}
    double fitted_offset = 0.0;      // constant term
    double residual_rms = 0.0;       // over the envelope points
    double predicted_gamma = 0.0;    // NaN when no prediction applies
    std::set<int> dominant_p;
    bool degenerate = false;         // prediction skipped: tied characteristic roots
    std::vector<int> envelope_n;     // positions of the fitted block maxima
    std::vector<double> g_magnitudes;
};

// Least squares of the block-max envelope of y against gamma n^{2/3} +
// b n^{1/3} + c.  Window must start at n >= 500 and contain at least 200
// usable points.  When a dominance classification is supplied, the predicted
// gamma of the dominant characteristic roots is attached for comparison.
GrowthAnalysis fit_growth_rate(const std::vector<double>& g_magnitudes, int window_lo,
                               int window_hi,
                               const std::optional<DominanceClass>& dominance = std::nullopt);

// True when ln|h_n| / n is at most -1 at n_max and nonincreasing (block
// envelopes, slack 1e-3) over the last decade of n, the signature of a
// superexponentially convergent series.  Requires n_max >= 3000.
bool verify_convergence_radius(const TaylorCoefficients& tc);

}  // namespace hillpt
