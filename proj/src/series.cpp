#include "hillpt/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hillpt {

TaylorCoefficients generate_coefficients(const OscillatorParams& p, double energy,
                                         double h0, double h1, int n_max) {
    validate_params(p);
    if (!std::isfinite(energy)) throw std::invalid_argument("energy must be finite");
    if (!std::isfinite(h0) || !std::isfinite(h1)) throw std::invalid_argument("initial pair must be finite");
    if (h0 == 0.0 && h1 == 0.0) throw std::invalid_argument("initial pair (h0, h1) must not both vanish");
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");

    TaylorCoefficients tc;
    tc.kind = SeriesKind::General;
    tc.h0 = h0;
    tc.h1 = h1;
    tc.energy = energy;
    tc.params = p;
    tc.values.resize(static_cast<std::size_t>(n_max) + 1);
    tc.values[0] = ScaledReal(h0);
    tc.values[1] = ScaledReal(h1);

    const double theta = theta_coeff(p);
    for (int n = 0; n + 2 <= n_max; ++n) {
        ScaledReal acc = tc.values[n] * diag_coeff(p, energy, n);
        if (n >= 1) acc += tc.values[n - 1] * p.delta;
        if (n >= 2) acc += tc.values[n - 2] * theta;
        if (n >= 3) acc += tc.values[n - 3] * (-p.beta);
        if (n >= 4) acc += tc.values[n - 4];
        tc.values[n + 2] = (-acc) / super_coeff<double>(n);
    }
    return tc;
}

std::pair<TaylorCoefficients, TaylorCoefficients> sigma_omega(const OscillatorParams& p,
                                                              double energy, int n_max) {
    TaylorCoefficients sigma = generate_coefficients(p, energy, 1.0, 0.0, n_max);
    sigma.kind = SeriesKind::Sigma;
    TaylorCoefficients omega = generate_coefficients(p, energy, 0.0, 1.0, n_max);
    omega.kind = SeriesKind::Omega;
    return {std::move(sigma), std::move(omega)};
}

double recurrence_residual(const TaylorCoefficients& tc) {
    const auto& h = tc.values;
    if (h.size() < 3) throw std::invalid_argument("need at least three coefficients");
    const OscillatorParams& p = tc.params;
    const double theta = theta_coeff(p);
    double worst = 0.0;
    for (int n = 0; n + 2 < static_cast<int>(h.size()); ++n) {
        ScaledReal terms[6];
        int m = 0;
        terms[m++] = h[n + 2] * super_coeff<double>(n);
        terms[m++] = h[n] * diag_coeff(p, tc.energy, n);
        if (n >= 1) terms[m++] = h[n - 1] * p.delta;
        if (n >= 2) terms[m++] = h[n - 2] * theta;
        if (n >= 3) terms[m++] = h[n - 3] * (-p.beta);
        if (n >= 4) terms[m++] = h[n - 4];

        ScaledReal row_sum;
        double log_max = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            row_sum += terms[i];
            log_max = std::max(log_max, terms[i].log_abs());
        }
        if (!std::isfinite(log_max)) continue;  // all-zero row
        worst = std::max(worst, std::exp(row_sum.log_abs() - log_max));
    }
    return worst;
}

}  // namespace hillpt
