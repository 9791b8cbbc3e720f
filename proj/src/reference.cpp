#include "hillpt/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hillpt {

namespace {

// Number of eigenvalues of the tridiagonal matrix (diag d, off-diagonal e)
// strictly below x, by counting negative Sturm pivots.
int sturm_count_below(const std::vector<double>& d, double e, double x) {
    const double e2 = e * e;
    const double pivmin = std::numeric_limits<double>::min() /
                          std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - e2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

double quartic_ground_energy_fd(double half_width, double step) {
    if (!(half_width > 0.0) || !(step > 0.0) || step >= half_width)
        throw std::invalid_argument("need 0 < step < half_width");
    const auto m = static_cast<std::size_t>(std::llround(2.0 * half_width / step)) - 1;
    if (m < 3) throw std::invalid_argument("grid too coarse");
    const double h2 = step * step;
    std::vector<double> d(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = -half_width + step * static_cast<double>(i + 1);
        d[i] = 2.0 / h2 + x * x * x * x;
    }
    const double e = -1.0 / h2;

    double lo = *std::min_element(d.begin(), d.end()) - 2.0 * std::abs(e);
    double hi = *std::max_element(d.begin(), d.end()) + 2.0 * std::abs(e);
    while (hi - lo > 1e-13 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count_below(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double quartic_ground_energy() {
    const double coarse = quartic_ground_energy_fd(6.0, 4e-3);
    const double fine = quartic_ground_energy_fd(6.0, 2e-3);
    return (4.0 * fine - coarse) / 3.0;
}

std::vector<Rational> rational_series_by_recursion(const OscillatorParamsT<Rational>& p,
                                                   const Rational& energy, const Rational& h0,
                                                   const Rational& h1, int n_max) {
    if (p.s.sign() <= 0) throw std::invalid_argument("screening exponent s must be positive");
    if (n_max < 2 || n_max > 64) throw std::invalid_argument("n_max must lie in [2, 64]");
    std::vector<Rational> h(static_cast<std::size_t>(n_max) + 1);
    h[0] = h0;
    h[1] = h1;
    const Rational theta = theta_coeff(p);
    for (int n = 0; n + 2 <= n_max; ++n) {
        Rational acc = diag_coeff(p, energy, n) * h[static_cast<std::size_t>(n)];
        if (n >= 1) acc += p.delta * h[static_cast<std::size_t>(n - 1)];
        if (n >= 2) acc += theta * h[static_cast<std::size_t>(n - 2)];
        if (n >= 3) acc -= p.beta * h[static_cast<std::size_t>(n - 3)];
        if (n >= 4) acc += h[static_cast<std::size_t>(n - 4)];
        h[static_cast<std::size_t>(n + 2)] = -acc / super_coeff<Rational>(n);
    }
    return h;
}

}  // namespace hillpt
