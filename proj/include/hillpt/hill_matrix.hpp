#pragma once

#include <Eigen/Core>

#include "hillpt/oscillator.hpp"

namespace hillpt {

// Truncation of the infinite banded system to its leading n x n block under
// h_n = h_{n+1} = 0.  The energy enters only on the diagonal, so the full
// system matrix at energy E is entries - E * I and the truncated levels are
// eigenvalues of entries.
struct HillMatrix {
    Eigen::MatrixXd entries;
    OscillatorParams params{};
    Eigen::Index n = 0;
};

HillMatrix assemble(const OscillatorParams& p, Eigen::Index n);

}  // namespace hillpt
