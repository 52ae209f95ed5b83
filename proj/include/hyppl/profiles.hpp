#pragma once

#include "hyppl/types.hpp"

namespace hyppl::jacobi {

enum class ProfileFamily { gaussian_bump, hermite_gaussian };
enum class Parity { even, odd, none };

/// Smooth rapidly-decaying radial test function (stand-in for C_c^infty):
///   gaussian_bump:     exp(-((u-center)/width)^2)
///   hermite_gaussian:  H_k((u-center)/width) exp(-((u-center)/width)^2)
/// Decays faster than any power of cosh; derivatives are closed-form.
struct RadialProfile {
    ProfileFamily family = ProfileFamily::gaussian_bump;
    double center = 0.0;
    double width = 1.0;
    int poly_degree = 0;  // Hermite index k (hermite_gaussian only)

    double eval(double u) const;
    double deriv(double u) const;
    double deriv2(double u) const;

    Parity parity() const;

    /// u beyond which |h(u)| * cosh(extra * u) stays below `tiny`.
    double support_radius(double tiny = 1e-18, double extra = 0.0) const;
};

}  // namespace hyppl::jacobi
