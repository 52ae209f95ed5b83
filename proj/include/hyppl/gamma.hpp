#pragma once

#include "hyppl/types.hpp"

namespace hyppl {

/// Complex Gamma function (Lanczos approximation, reflection for Re z < 1/2).
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex gamma(Complex z);

/// 1/Gamma(z), entire; returns exactly 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

/// Pochhammer symbol (x)_n = x(x+1)...(x+n-1), (x)_0 = 1.
Complex pochhammer(Complex x, int n);

}  // namespace hyppl
