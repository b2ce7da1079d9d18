#pragma once

namespace gentrig {

// Complete Euler beta B(a,b) for a, b > 0.
double beta(double a, double b);

// log B(a,b) without intermediate overflow.
double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b) for a, b > 0 and x in [0,1].
// `one_minus_x` must equal 1-x; callers that know 1-x to better than
// rounding of the subtraction should pass it explicitly, otherwise use
// the two-argument overload.
double ibeta_reg(double a, double b, double x, double one_minus_x);
double ibeta_reg(double a, double b, double x);

} // namespace gentrig
