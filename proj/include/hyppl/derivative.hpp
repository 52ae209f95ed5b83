#pragma once

#include <functional>

#include "hyppl/types.hpp"

namespace hyppl {

/// Central finite differences with Richardson (Ridders) extrapolation.
/// order is 1 or 2. Throws NumericError if the extrapolation ladder
/// degenerates before reaching a stable value.
Complex differentiate(const std::function<Complex(double)>& f, double x0, int order,
                      double h0 = 0.25);

}  // namespace hyppl
