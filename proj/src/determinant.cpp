#include "hillpt/determinant.hpp"

#include <stdexcept>

namespace hillpt {

Rational bareiss_determinant(RationalMatrix a) {
    const Eigen::Index n = a.rows();
    if (n == 0 || a.cols() != n) throw std::invalid_argument("matrix must be square and nonempty");
    int sign = 1;
    Rational prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = k + 1; i < n; ++i) {
                if (!a(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv < 0) return Rational(0);
            a.row(k).swap(a.row(piv));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Rational(0);
        }
        prev = a(k, k);
    }
    Rational det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

void validate_rational_inputs(const OscillatorParamsT<Rational>& p, int m) {
    if (p.s.sign() <= 0) throw std::invalid_argument("screening exponent s must be positive");
    if (m < 0 || m > rational_order_cap)
        throw std::invalid_argument("order m must lie in [0, " + std::to_string(rational_order_cap) + "]");
}

// Bordered block: rows 0..m of the system, first column taken from the known
// coefficient (h_0 for sigma, h_1 for omega), remaining columns h_2..h_{m+1}.
RationalSeriesValue coefficient_from_determinant(const OscillatorParamsT<Rational>& p,
                                                 const Rational& energy, int m, int known_col) {
    const Eigen::Index dim = m + 1;
    RationalMatrix d(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
        d(row, 0) = band_entry(p, energy, row, known_col);
        for (Eigen::Index j = 1; j < dim; ++j)
            d(row, j) = band_entry(p, energy, row, j + 1);
    }
    Rational det = bareiss_determinant(std::move(d));
    Rational norm(factorial(m + 1) * factorial(m + 2), BigInt(1));
    Rational value = det / norm;
    if (m % 2 == 0) value = -value;  // (-1)^{m+1}
    return {m + 2, value, det};
}

}  // namespace

RationalSeriesValue sigma_via_determinant(const OscillatorParamsT<Rational>& p,
                                          const Rational& energy, int m) {
    validate_rational_inputs(p, m);
    return coefficient_from_determinant(p, energy, m, 0);
}

RationalSeriesValue omega_via_determinant(const OscillatorParamsT<Rational>& p,
                                          const Rational& energy, int m) {
    validate_rational_inputs(p, m);
    return coefficient_from_determinant(p, energy, m, 1);
}

}  // namespace hillpt
