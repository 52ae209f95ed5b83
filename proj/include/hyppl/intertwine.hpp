#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hyppl/geometry.hpp"
#include "hyppl/quadrature.hpp"
#include "hyppl/types.hpp"

namespace hyppl::intertwine {

using geometry::CoordinatePoint;
using geometry::GroupElement;
using geometry::HyperboloidFunction;

struct SignedPowerParams {
    Complex exponent;
    int parity = 0;  // 0 or 1
};

/// |t|^lambda_eps = sgn(t)^eps |t|^lambda; t = 0 is a domain error unless
/// Re(exponent) > 0.
Complex signed_power(double t, const SignedPowerParams& p);

struct KernelParams {
    int xi = 0;
    int epsilon = 0;
    Complex lambda{0.0, 0.0};
    Complex mu{0.0, 0.0};
};

/// K^xi_{lambda,mu}(g) = |g11|^{(lambda+mu-1)/2}_{xi+eps} |g21|^{(mu-lambda-1)/2}_xi.
Complex kernel_K(const KernelParams& kp, const GroupElement& g);

/// omega^xi_m = (-1)^xi + (-1)^m i^m  (exact).
Complex omega(int m, int xi);

/// c_m(mu) = 2^{1-mu} pi e^{im pi/4} / (Gamma((mu+3+|m|)/4) Gamma((mu+3-|m|)/4)); entire.
Complex c_small(int m, Complex mu);

/// Knapp-Stein eigenvalue on the m-th K-type:
/// b^eps_m(mu) = sqrt(pi) i^eps (-1)^{(m+|m|)/2 - eps}
///               ((1+eps-mu)/2)_{(|m|-eps)/2} / Gamma((mu+1+|m|)/2).
Complex knapp_stein_b(int epsilon, int m, Complex mu);

/// Eigenvalue of the sign-adjusted intertwiner used by the eps=1 discrete
/// norms: -i b^1_m(mu) for m > 0, +i b^1_m(mu) for m < 0. The orientation is
/// fixed by positivity on mu in -2N (these are exactly the combinations the
/// sign estimates assert to be >= 0).
Complex hat_T_eigenvalue(int epsilon, int m, Complex mu);

/// Proportionality constant in T^eps_mu A^xi_{lambda,mu} = d A^{xi+eps}_{lambda,-mu}.
Complex tony_d(int xi, int epsilon, Complex lambda, Complex mu);

struct RieszParams {
    Complex alpha;
    int parity = 0;
};

/// u^eps_alpha(x) = |x|^alpha_eps / (2^{alpha/2} Gamma((alpha+1+eps)/2)); pointwise
/// values need x != 0 and Re alpha > -1.
Complex riesz_u(const RieszParams& p, double x);

/// int u^e1_alpha(x) u^e2_beta(y-x) dx = C(alpha,e1,beta,e2) u^{e1+e2}_{alpha+beta+1}(y).
Complex riesz_convolution_constant(Complex alpha, int eps1, Complex beta, int eps2);

/// K-finite vector of a principal series space: coefficients on the zeta_m.
struct KTypeCoefficients {
    int epsilon = 0;
    Complex mu{0.0, 0.0};
    std::map<int, Complex> coeffs;

    /// L^2(K) squared norm with the int_0^{2pi} convention: 2 pi sum |c_m|^2.
    double l2k_norm_sq() const;
};

// ---------------------------------------------------------------------------
// K-type transforms feeding the A operators: for a profile h on K-type m,
//   J0_m(mu) = J_0[ cosh^{-m/2}(x) h_e(x/2) ](mu)
//   J1_m(mu) = int_0^inf h_o(x/2) cosh^{m/2+1}(x) psi^m_mu(x) dx
// evaluated on a whole spectral list with one basis sweep.
struct ProfileTransforms {
    std::vector<Complex> J0, J1;
};
ProfileTransforms ktype_profile_transforms(int m, const jacobi::RadialProfile& h,
                                           const std::vector<Complex>& mus);

// scalar coefficient builders (per K-type m, from transform values)
Complex a_coef_unnormalized(int xi, int m, Complex mu, Complex J0m, Complex J1m);  // A^xi_mu
Complex a_coef_bold(int xi, int m, Complex mu, Complex J0m, Complex J1m);          // A^xi/G((1-mu)/2)
Complex a_coef_bb(int m, Complex mu, Complex J0m, Complex J1m);   // eps=0 combination
Complex a_coef_cal(int m, Complex mu, Complex J0m, Complex J1m);  // eps=1 combination

// tilde coefficients of the eps=0 combination (A_bb = alpha~ J0 + beta~ J1)
Complex alpha_tilde(int m, Complex mu);
Complex beta_tilde(int m, Complex mu);

// envelope coefficients of the eps=0 combined P (pole-free Pochhammer forms)
Complex alpha_m_eps0(int m, Complex mu);
Complex beta_m_eps0(int m, Complex mu);

// composition eigen-coefficients of the eps=1 pair on D_0 / D_1
Complex alpha_m_eps1(int m, Complex mu);
Complex beta_m_eps1(int m, Complex mu);

/// Un-normalized A^xi_mu on lambda = 0 data (K-type formula fast path).
KTypeCoefficients A_on_ktype(int xi, const HyperboloidFunction& f, Complex mu);

/// Normalized bold A^xi_mu = A^xi_mu / Gamma((1-mu)/2).
KTypeCoefficients combined_continuous_A(int xi, const HyperboloidFunction& f, Complex mu);

/// A_bb (eps=0 lattice combination, holomorphic), defined for all mu.
KTypeCoefficients combined_discrete_eps0_A(const HyperboloidFunction& f, Complex mu);

/// A_cal (eps=1 lattice combination) = bold A^0_mu.
KTypeCoefficients combined_discrete_eps1_A(const HyperboloidFunction& f, Complex mu);

/// Un-normalized P^xi_mu zeta_m at (theta, u).
Complex P_on_ktype(int xi, int epsilon, Complex mu, int m, CoordinatePoint p);

// normalized P envelopes (value at b_u; multiply by zeta_m(k_theta))
Complex p_envelope_bold(int xi, int m, Complex mu, double u);  // bold P zeta_m
Complex p_envelope_bb(int m, Complex mu, double u);            // P_bb zeta_m (eps=0)
Complex p_envelope_cal(int m, Complex mu, double u);           // P_cal zeta_m (eps=1)

/// Raw kernel quadrature for A^xi_{lambda,mu} in the (theta,y) chart:
///   coefficient on K-type m = int_0^pi int_R K^xi_{-lambda,-mu}(nbar_{-y} k_{-theta})
///                             f_m(k_theta nbar_y) (1/2) dy dtheta,
/// singular lines split and integrated with 1/2-power substitutions.
/// Slow; used as the A-oracle at lambda = 0 and as the evaluation path for
/// lambda != 0.
KTypeCoefficients A_kernel_quadrature(int xi, const HyperboloidFunction& f, Complex lambda,
                                      Complex mu, const QuadratureSpec& spec = {});

/// ankh^nu_lambda f evaluated at k_theta nbar_y: the normalized convolution
/// with |x|^{(lambda-nu)/2 - 1} along the nbar coordinate. lambda is taken
/// from f. For lambda == nu this is the identity.
Complex ankh_apply(const HyperboloidFunction& f, Complex nu, double theta, double y,
                   const QuadratureSpec& spec = {});

/// Generalized form taking an arbitrary section in the (theta,y) chart
/// (used for composing ankh maps); `u_support` bounds the section's radial
/// support for truncation purposes.
Complex ankh_apply_section(const std::function<Complex(double, double)>& section, Complex lambda,
                           Complex nu, double theta, double y, double u_support,
                           const QuadratureSpec& spec = {});

}  // namespace hyppl::intertwine
