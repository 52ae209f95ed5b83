#pragma once

#include "hyppl/types.hpp"

namespace hyppl {

/// Gauss hypergeometric function 2F1(a,b;c;z) for real z <= 0.
///
/// Evaluation strategy by region:
///   - a or b in -N0: finite polynomial;
///   - c-a or c-b in -N0: Euler transform to a terminating series
///     (this covers every discrete-spectrum evaluation exactly);
///   - |z| <= 0.45: defining series;
///   - -8 <= z < -0.45: Pfaff transform w = z/(z-1) in [0.31, 8/9];
///   - z < -8: continuation by integrating the hypergeometric ODE in the
///     variable t = asinh(sqrt(-z)), where it is the Jacobi equation
///     g'' + [(2a'+1)coth t + (2b'+1)tanh t]g' + 4ab g = 0 with
///     a' = c-1, b' = a+b-c.
///
/// Throws DomainError if c is a non-positive integer (and no terminating
/// path applies), NumericError with the partial sum if a series fails to
/// converge.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

/// Defining power series; valid for |z| < 1, intended for |z| <= 0.5.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double z, int max_terms = 20000);

/// Pfaff-transformed evaluation (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); z < 0.
Complex hyp2f1_pfaff(Complex a, Complex b, Complex c, double z);

}  // namespace hyppl
