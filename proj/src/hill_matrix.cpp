#include "hillpt/hill_matrix.hpp"

#include <stdexcept>

namespace hillpt {

HillMatrix assemble(const OscillatorParams& p, Eigen::Index n) {
    validate_params(p);
    if (n < 2) throw std::invalid_argument("truncation order must be at least 2");
    HillMatrix hm;
    hm.params = p;
    hm.n = n;
    hm.entries = Eigen::MatrixXd::Zero(n, n);
    const OscillatorParamsT<double>& pd = p;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index lo = std::max<Eigen::Index>(0, i - 4);
        const Eigen::Index hi = std::min<Eigen::Index>(n - 1, i + 2);
        for (Eigen::Index j = lo; j <= hi; ++j)
            hm.entries(i, j) = band_entry(pd, 0.0, i, j);
    }
    return hm;
}

}  // namespace hillpt
