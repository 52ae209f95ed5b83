#pragma once

#include <functional>
#include <vector>

#include "hyppl/profiles.hpp"
#include "hyppl/quadrature.hpp"
#include "hyppl/types.hpp"

namespace hyppl::geometry {

/// Element of SL(2,R).
struct GroupElement {
    double a11 = 1, a12 = 0, a21 = 0, a22 = 1;

    static GroupElement k_theta(double theta);            // rotation
    static GroupElement b_u(double u);                    // symmetric hyperbolic
    static GroupElement nbar(double x);                   // lower unipotent
    static GroupElement w0();                             // longest Weyl element
    static GroupElement diag(double t);                   // diag(t, 1/t), t != 0

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;  // adjugate (det = 1)
    double det() const { return a11 * a22 - a12 * a21; }
};

struct CoordinatePoint {
    double theta = 0.0;  // in [0, pi)
    double u = 0.0;
};

struct KTypeTerm {
    int m;
    jacobi::RadialProfile profile;
};

/// Finite K-type sum f(k_theta b_u) = sum_m e^{im theta} h_m(u) on the line
/// bundle with parameters (epsilon, lambda = i lambda_imag).
struct HyperboloidFunction {
    int epsilon = 0;
    double lambda_imag = 0.0;
    std::vector<KTypeTerm> terms;

    /// every m must be distinct and m == epsilon (mod 2)
    void validate() const;
    Complex eval(CoordinatePoint p) const;
    int max_abs_m() const;
};

/// g = k_theta b_u diag(t, 1/t) with theta in [0, pi), t != 0.
struct KBDecomposition {
    double theta;
    double u;
    double t;
};
KBDecomposition kb_decompose(const GroupElement& g);

/// The (theta, y) chart point k_theta nbar_y.
GroupElement kn_coordinates(double theta, double y);

/// Section value f(k_theta nbar_y) obtained from the (theta,u) data via the
/// KB decomposition and the chi_{eps,lambda}-equivariance.
Complex section_eval_kn(const HyperboloidFunction& f, double theta, double y);

/// ||f||^2 = int_0^pi int_R |f(k_th b_u)|^2 cosh(2u) du dtheta,
/// computed K-typewise (cross terms vanish).
double invariant_norm_sq(const HyperboloidFunction& f, const QuadratureSpec& spec = {});

/// Same norm through the (theta, y) chart with measure (1/2) dy dtheta.
double invariant_norm_sq_kn(const HyperboloidFunction& f, const QuadratureSpec& spec = {});

/// Casimir Delta_lambda in (theta,u):
///   lambda^2/cosh^2(2u) + 2 lambda tanh(2u)/cosh(2u) d_theta
///   + 2 tanh(2u) d_u - cosh^{-2}(2u) d_theta^2 + d_u^2,
/// with d_theta acting as i m on the m-th term; u-derivatives closed-form.
Complex casimir_apply(const HyperboloidFunction& f, CoordinatePoint p);

/// Hypergeometric reduction on the m-th K-type, acting in t:
///   box_m = m(m+2) + 8(-1+(3+m)t) d/dt - 16 t(1-t) d^2/dt^2,
/// derivatives by finite differences.
Complex box_apply(int m, const std::function<Complex(double)>& h, double t);

}  // namespace hyppl::geometry
