#include "hillpt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hillpt/eigensolver.hpp"
#include "hillpt/hill_matrix.hpp"

namespace hillpt {

Spectrum compute_spectrum(const OscillatorParams& p, Eigen::Index n, int k) {
    validate_params(p);
    if (n < 2) throw std::invalid_argument("truncation order must be at least 2");
    if (k < 2 || k > n)
        throw std::invalid_argument("level count must satisfy 2 <= k <= n");

    const HillMatrix hm = assemble(p, n);
    const EigenDecomposition dec = eigenvalues(hm.entries);

    std::vector<std::complex<double>> all(dec.eigenvalues.data(),
                                          dec.eigenvalues.data() + dec.eigenvalues.size());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    Spectrum spec;
    spec.n = n;
    spec.params = p;
    spec.levels.resize(k);
    spec.reality_flags.resize(k);
    for (int i = 0; i < k; ++i) {
        spec.levels(i) = all[static_cast<std::size_t>(i)];
        spec.reality_flags[i] =
            std::abs(all[static_cast<std::size_t>(i)].imag()) <= reality_tol * (1.0 + std::abs(all[static_cast<std::size_t>(i)].real()));
    }
    return spec;
}

ConvergenceReport convergence_sweep(const OscillatorParams& p,
                                    const std::vector<Eigen::Index>& n_values, int k) {
    validate_params(p);
    if (n_values.empty()) throw std::invalid_argument("need at least one truncation order");
    for (std::size_t j = 0; j + 1 < n_values.size(); ++j)
        if (n_values[j] >= n_values[j + 1])
            throw std::invalid_argument("truncation orders must be strictly increasing");
    if (k < 2 || static_cast<Eigen::Index>(k) > n_values.front())
        throw std::invalid_argument("level count must satisfy 2 <= k <= smallest truncation order");

    ConvergenceReport rep;
    rep.n_values = n_values;
    rep.params = p;
    const Eigen::Index rows = static_cast<Eigen::Index>(n_values.size());
    rep.energies.resize(rows, k);
    for (Eigen::Index row = 0; row < rows; ++row) {
        const Spectrum s = compute_spectrum(p, n_values[static_cast<std::size_t>(row)], k);
        rep.energies.row(row) = s.levels.transpose();
    }
    rep.deltas.resize(std::max<Eigen::Index>(rows - 1, 0), k);
    for (Eigen::Index row = 0; row + 1 < rows; ++row)
        for (int col = 0; col < k; ++col)
            rep.deltas(row, col) = std::abs(rep.energies(row + 1, col) - rep.energies(row, col));

    rep.converged_digits.assign(static_cast<std::size_t>(k), 0);
    if (rows >= 2) {
        for (int col = 0; col < k; ++col) {
            const double delta = rep.deltas(rows - 2, col);
            const double ref = 1.0 + std::abs(rep.energies(rows - 1, col));
            int digits;
            if (delta == 0.0) {
                digits = 15;
            } else {
                digits = static_cast<int>(std::floor(-std::log10(delta / ref)));
                digits = std::clamp(digits, 0, 15);
            }
            rep.converged_digits[static_cast<std::size_t>(col)] = digits;
        }
    }
    return rep;
}

}  // namespace hillpt
