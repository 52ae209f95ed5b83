#pragma once

#include <utility>
#include <vector>

#include "hyppl/types.hpp"

namespace hyppl {

enum class SpectralRule { uniform_trapezoid, gauss_legendre_panels };

/// Discretization of the spectral integrals over the unitary axis.
///
/// Convention: every integral over the imaginary spectral axis in this
/// library means  int_0^infty g(i s) ds  of the (even in s) integrand,
/// equivalently (1/2) int_R ds. Grids therefore live on [0, s_max].
struct SpectralGridSpec {
    double s_max = 10.0;
    int n_points = 400;
    SpectralRule rule = SpectralRule::uniform_trapezoid;
};

/// Nodes and weights approximating int_0^{s_max} g(s) ds.
std::vector<std::pair<double, double>> spectral_nodes(const SpectralGridSpec& grid);

}  // namespace hyppl
