#pragma once

#include <functional>

#include "hyppl/types.hpp"

namespace hyppl {

struct QuadratureSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
    double truncation_radius = 30.0;  // for unbounded intervals
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

/// Integration interval. Endpoint singularities of type |x - x0|^{-s}, s < 1,
/// are declared by the caller; the integrator removes them by the power
/// substitution x = x0 +/- u^{1/(1-s)}.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool lo_infinite = false;
    bool hi_infinite = false;
    double lo_singularity = 0.0;  // exponent s at lo (0 = regular)
    double hi_singularity = 0.0;

    static Interval finite(double a, double b) { return {a, b}; }
    static Interval half_line(double a) {
        Interval iv;
        iv.lo = a;
        iv.hi_infinite = true;
        return iv;
    }
    static Interval whole_line() {
        Interval iv;
        iv.lo_infinite = true;
        iv.hi_infinite = true;
        return iv;
    }
    Interval& singular_lo(double s) {
        lo_singularity = s;
        return *this;
    }
    Interval& singular_hi(double s) {
        hi_singularity = s;
        return *this;
    }
};

/// Globally adaptive Gauss-Kronrod 15(7) quadrature of a complex-valued
/// integrand. Unbounded ends are truncated at spec.truncation_radius and a
/// decay-based tail bound is folded into the error estimate. Throws
/// NumericError (with the best estimate attached) if the subdivision budget
/// is exhausted before the tolerance is met.
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, Interval iv,
                                    const QuadratureSpec& spec = {});

}  // namespace hyppl
