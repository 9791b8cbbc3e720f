#include "hillpt/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace hillpt {

namespace {
constexpr double kLn3 = 1.0986122886681096914;
}

std::vector<double> extract_g_sequence(const TaylorCoefficients& tc) {
    std::vector<double> y(tc.values.size());
    for (std::size_t n = 0; n < tc.values.size(); ++n) {
        const double la = tc.values[n].log_abs();
        if (std::isinf(la) && la < 0.0) {
            y[n] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        const double nd = static_cast<double>(n);
        y[n] = la + nd / 3.0 * kLn3 + std::lgamma(1.0 + nd / 3.0);
    }
    return y;
}

GrowthAnalysis fit_growth_rate(const std::vector<double>& g_magnitudes, int window_lo,
                               int window_hi, const std::optional<DominanceClass>& dominance) {
    if (window_lo < 500)
        throw std::invalid_argument("fit window must start at n >= 500, inside the asymptotic regime");
    if (window_hi <= window_lo || window_hi >= static_cast<int>(g_magnitudes.size()))
        throw std::invalid_argument("fit window exceeds the available sequence");
    int usable = 0;
    for (int n = window_lo; n <= window_hi; ++n)
        if (std::isfinite(g_magnitudes[static_cast<std::size_t>(n)])) ++usable;
    if (usable < 200)
        throw std::invalid_argument("fit window holds fewer than 200 usable points");

    GrowthAnalysis ga;
    ga.window_lo = window_lo;
    ga.window_hi = window_hi;
    for (int b = window_lo; b + 12 <= window_hi + 1; b += 12) {
        int best_n = -1;
        double best = -std::numeric_limits<double>::infinity();
        for (int n = b; n < b + 12; ++n) {
            const double v = g_magnitudes[static_cast<std::size_t>(n)];
            if (std::isfinite(v) && v > best) {
                best = v;
                best_n = n;
            }
        }
        if (best_n >= 0) {
            ga.envelope_n.push_back(best_n);
            ga.g_magnitudes.push_back(best);
        }
    }
    const auto pts = static_cast<Eigen::Index>(ga.envelope_n.size());
    if (pts < 5) throw std::invalid_argument("too few envelope blocks for a three-parameter fit");

    Eigen::MatrixXd a(pts, 3);
    Eigen::VectorXd rhs(pts);
    for (Eigen::Index i = 0; i < pts; ++i) {
        const double nd = static_cast<double>(ga.envelope_n[static_cast<std::size_t>(i)]);
        a(i, 0) = std::cbrt(nd) * std::cbrt(nd);
        a(i, 1) = std::cbrt(nd);
        a(i, 2) = 1.0;
        rhs(i) = ga.g_magnitudes[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(rhs);
    ga.fitted_gamma = coef(0);
    ga.fitted_subleading = coef(1);
    ga.fitted_offset = coef(2);
    ga.residual_rms = std::sqrt((a * coef - rhs).squaredNorm() / static_cast<double>(pts));

    ga.predicted_gamma = std::numeric_limits<double>::quiet_NaN();
    if (dominance) {
        ga.dominant_p = dominance->dominant_p;
        if (dominance->regime == DominanceRegime::Degenerate) {
            ga.degenerate = true;
        } else {
            ga.predicted_gamma = dominance->re_gamma[static_cast<std::size_t>(*dominance->dominant_p.begin() - 1)];
        }
    }
    return ga;
}

bool verify_convergence_radius(const TaylorCoefficients& tc) {
    const int n_max = static_cast<int>(tc.values.size()) - 1;
    if (n_max < 3000)
        throw std::invalid_argument("convergence check needs coefficients up to n >= 3000");

    const double last_log = tc.values[static_cast<std::size_t>(n_max)].log_abs();
    if (!(last_log / static_cast<double>(n_max) <= -1.0)) return false;

    double prev = std::numeric_limits<double>::infinity();
    for (int b = n_max / 10; b + 12 <= n_max + 1; b += 12) {
        int best_n = -1;
        double best = -std::numeric_limits<double>::infinity();
        for (int n = b; n < b + 12; ++n) {
            const double v = tc.values[static_cast<std::size_t>(n)].log_abs();
            if (std::isfinite(v) && v > best) {
                best = v;
                best_n = n;
            }
        }
        if (best_n < 0) continue;
        const double r = best / static_cast<double>(best_n);
        if (r > prev + 1e-3) return false;
        prev = r;
    }
    return true;
}

}  // namespace hillpt
