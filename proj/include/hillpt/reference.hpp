#pragma once

#include <vector>

#include "hillpt/rational.hpp"

namespace hillpt {

// Ground level of -u'' + x^4 u = E u with Dirichlet walls at +-half_width,
// from the standard three-point discretization and Sturm-sequence bisection
// on the resulting tridiagonal matrix.  Independent of the series machinery.
double quartic_ground_energy_fd(double half_width, double step);

// Richardson pairing of steps h and h/2 to cancel the O(h^2) truncation term.
double quartic_ground_energy();

// Exact forward recursion for the Taylor coefficients over the rationals;
// serves as the oracle against the bordered-determinant route.  n_max <= 64
// keeps the exact integers from ballooning.
std::vector<Rational> rational_series_by_recursion(const OscillatorParamsT<Rational>& p,
                                                   const Rational& energy, const Rational& h0,
                                                   const Rational& h1, int n_max);

}  // namespace hillpt
