#pragma once

#include <functional>
#include <vector>

#include "hyppl/profiles.hpp"
#include "hyppl/quadrature.hpp"
#include "hyppl/spectral_grid.hpp"
#include "hyppl/types.hpp"

namespace hyppl::jacobi {

/// General Jacobi-function parameters (alpha not in -N, Re beta > -1).
struct JacobiSpec {
    Complex alpha;
    Complex beta;
    void validate() const;
};

/// K-type slot of the specialized transforms: j in {0,1}, m in Z.
struct KTypeJacobiSlot {
    int j = 0;
    int m = 0;
};

struct DiscreteSpectrum {
    std::vector<double> points;           // strictly negative reals
    std::vector<Complex> residue_weights;  // Res_{nu=mu}(l_j(nu) l_j(-nu))^{-1}
};

/// phi^{alpha,beta}_mu(t) = 2F1((alpha+beta+1+mu)/2, (alpha+beta+1-mu)/2; alpha+1; -sinh^2 t).
/// The symmetric parameter pair is the operative one (even in mu and an exact
/// eigenfunction); `printed_second_parameter` switches the second parameter to
/// (alpha-beta+1+mu)/2 for the consistency test against the literal display.
Complex jacobi_phi(const JacobiSpec& spec, Complex mu, double t,
                   bool printed_second_parameter = false);

/// Even solution phi^m_mu(x) = 2F1((1+m+mu)/4, (1+m-mu)/4; 1/2; -sinh^2 x).
Complex phi_m(int m, Complex mu, double x);

/// Odd solution psi^m_mu(x) = i sinh(x) 2F1((3+m+mu)/4, (3+m-mu)/4; 3/2; -sinh^2 x).
Complex psi_m(int m, Complex mu, double x);

/// Bulk evaluation of phi^m_mu / psi^m_mu on a grid: integrates
/// u'' + (m+1) tanh(t) u' + ((1+m)^2 - mu^2)/4 u = 0 from t=0 with the
/// (phi, psi) initial data (1,0) and (0,i), once for all spectral points.
/// ts must be ascending and non-negative.
class BasisSweep {
  public:
    BasisSweep(int m, std::vector<Complex> mus, std::vector<double> ts);
    Complex phi(std::size_t imu, std::size_t it) const { return phi_[imu][it]; }
    Complex psi(std::size_t imu, std::size_t it) const { return psi_[imu][it]; }
    const std::vector<Complex>& mus() const { return mus_; }
    const std::vector<double>& ts() const { return ts_; }

  private:
    std::vector<Complex> mus_;
    std::vector<double> ts_;
    std::vector<std::vector<Complex>> phi_, psi_;  // [imu][it]
};

/// l_j(mu) = Gamma(mu/2) / (Gamma((mu+1+2j+|m|)/4) Gamma((mu+1+2j-|m|)/4)).
/// Returns an infinite pole marker where Gamma(mu/2) poles without a
/// compensating denominator pole; finite limits are taken where both sides
/// degenerate.
Complex l_weight(KTypeJacobiSlot slot, Complex mu);

/// 1/|l_j(i s)|^2, the continuous spectral density factor; total in s.
double l_weight_inv_abs_sq(KTypeJacobiSlot slot, double s);

/// c_{alpha,beta}(mu) = Gamma(mu) Gamma(alpha+1) /
///   (Gamma((alpha+|beta|+1+mu)/2) Gamma((alpha-|beta|+1+mu)/2)).
Complex c_jacobi(const JacobiSpec& spec, Complex mu);

/// D_j = { eta = 4k+1+2j-|m| < 0, k in N_0 } with residue weights attached.
DiscreteSpectrum discrete_set(KTypeJacobiSlot slot);

/// Res_{nu=mu0} (l_j(nu) l_j(-nu))^{-1} by limit extrapolation.
Complex residue_weight(KTypeJacobiSlot slot, double mu0);

/// Correction to the residue bookkeeping at bound states sitting on a pole
/// of Gamma(nu/2) (odd |m|, even mu0): the spectral weight there is half the
/// naive residue value. Verified against closed-form eigenfunction norms.
inline double residue_parity_factor(int m) { return parity_mod2(m) == 1 ? 0.5 : 1.0; }

/// J_0 f(mu) = int_0^inf f(t) phi^m_mu(t) cosh^{m+1}(t) dt   (slot.j == 0)
/// J_1 f(mu) = int_0^inf f(t) psi^m_mu(t) sinh(t) cosh^{m+1}(t) dt  (slot.j == 1)
/// Truncated where the integrand envelope falls below 1e-16 of its peak.
Complex fj_forward(const std::function<Complex(double)>& f, KTypeJacobiSlot slot, Complex mu,
                   const QuadratureSpec& spec = {});

struct FjInversion {
    Complex value{0.0, 0.0};
    double tail_fraction = 0.0;  // |integrand(s_max)| relative to its peak
    bool tail_warning = false;
};

/// Inversion formulas. j=0 recovers f(t); j=1 recovers sinh(t) f(t):
///   f(t)        = (1/4pi^2) int_0^inf J0f(is) phi^m_is(t) ds/|l_0|^2 - (1/2pi) sum_{D_0} ...
///   sinh(t)f(t) = (-1/pi^2) int_0^inf J1f(is) psi^m_is(t) ds/|l_1|^2 + (2/pi) sum_{D_1} ...
/// Discrete terms carry residue_parity_factor(m). Jf is evaluated on the grid
/// mu = is and at the D_j points.
FjInversion fj_invert(KTypeJacobiSlot slot, const std::function<Complex(Complex)>& Jf, double t,
                      const SpectralGridSpec& grid, bool drop_discrete = false);

}  // namespace hyppl::jacobi
