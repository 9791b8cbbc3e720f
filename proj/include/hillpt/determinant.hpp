#pragma once

#include "hillpt/rational.hpp"

namespace hillpt {

// Exact determinant via Bareiss fraction-free elimination with row pivoting.
Rational bareiss_determinant(RationalMatrix a);

inline constexpr int rational_order_cap = 12;

struct RationalSeriesValue {
    int order;            // index of the produced coefficient (m + 2)
    Rational value;       // sigma_{m+2} or omega_{m+2}
    Rational determinant; // det of the bordered block before normalization
};

// Closed-form Taylor coefficients from bordered determinants of the banded
// linear system.  Rows 0..m couple the unknowns h_2..h_{m+2} to the initial
// pair (h_0, h_1); Cramer's rule on the triangular block (whose determinant
// is (m+1)! (m+2)!) gives
//   sigma_{m+2} = (-1)^{m+1} det(D_sigma) / ((m+1)! (m+2)!)
// where D_sigma stacks the h_0 column next to the h_2..h_{m+1} columns, and
// omega uses the h_1 column instead.  Requires 0 <= m <= rational_order_cap.
RationalSeriesValue sigma_via_determinant(const OscillatorParamsT<Rational>& p,
                                          const Rational& energy, int m);
RationalSeriesValue omega_via_determinant(const OscillatorParamsT<Rational>& p,
                                          const Rational& energy, int m);

}  // namespace hillpt
