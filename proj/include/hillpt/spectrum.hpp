#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "hillpt/oscillator.hpp"

namespace hillpt {

// Lowest k truncated levels, sorted by (Re, Im).  Complex pairs are kept and
// flagged, never dropped: reality means |Im E| <= 1e-8 * (1 + |Re E|).
struct Spectrum {
    Eigen::Index n = 0;
    Eigen::VectorXcd levels;
    std::vector<bool> reality_flags;
    OscillatorParams params{};
};

inline constexpr double reality_tol = 1e-8;

Spectrum compute_spectrum(const OscillatorParams& p, Eigen::Index n, int k);

// Levels tracked across a strictly increasing list of truncation orders, with
// successive absolute differences and a digits-of-agreement estimate
// floor(-log10(delta / (1 + |E|))) clamped to [0, 15] from the last pair.
struct ConvergenceReport {
    std::vector<Eigen::Index> n_values;
    Eigen::MatrixXcd energies;  // row per truncation order, column per level
    Eigen::MatrixXd deltas;     // row j compares n_values[j] and n_values[j+1]
    std::vector<int> converged_digits;
    OscillatorParams params{};
};

ConvergenceReport convergence_sweep(const OscillatorParams& p,
                                    const std::vector<Eigen::Index>& n_values, int k);

}  // namespace hillpt
