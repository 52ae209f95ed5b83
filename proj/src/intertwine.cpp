#include "hyppl/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyppl/gamma.hpp"
#include "hyppl/jacobi.hpp"

namespace hyppl::intertwine {

using jacobi::BasisSweep;
using jacobi::RadialProfile;

Complex signed_power(double t, const SignedPowerParams& p) {
    if (p.parity != 0 && p.parity != 1) throw DomainError("signed_power: parity must be 0 or 1");
    if (t == 0.0) {
        if (p.exponent.real() > 0.0) return {0.0, 0.0};
        throw DomainError("signed_power: t = 0 with Re(exponent) <= 0");
    }
    double sgn = (t < 0.0 && p.parity == 1) ? -1.0 : 1.0;
    return sgn * std::pow(Complex(std::abs(t), 0.0), p.exponent);
}

Complex kernel_K(const KernelParams& kp, const GroupElement& g) {
    if (g.a11 == 0.0 || g.a21 == 0.0)
        throw DomainError("kernel_K: vanishing matrix entry (singular set)");
    SignedPowerParams p1{(kp.lambda + kp.mu - 1.0) / 2.0, parity_mod2(kp.xi + kp.epsilon)};
    SignedPowerParams p2{(kp.mu - kp.lambda - 1.0) / 2.0, parity_mod2(kp.xi)};
    return signed_power(g.a11, p1) * signed_power(g.a21, p2);
}

Complex omega(int m, int xi) {
    // (-1)^m i^m = (-i)^m
    static const Complex table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    Complex mi = table[parity_mod2(m) + 2 * ((((m % 4) + 4) % 4) / 2)];
    // table index is m mod 4 computed directly:
    mi = table[((m % 4) + 4) % 4];
    return ((xi % 2 == 0) ? 1.0 : -1.0) + mi;
}

Complex c_small(int m, Complex mu) {
    double am = std::abs(m);
    return std::pow(Complex(2.0, 0.0), 1.0 - mu) * kPi * std::exp(kI * (m * kPi / 4.0)) *
           reciprocal_gamma((mu + 3.0 + am) / 4.0) * reciprocal_gamma((mu + 3.0 - am) / 4.0);
}

Complex knapp_stein_b(int epsilon, int m, Complex mu) {
    if (parity_mod2(m) != parity_mod2(epsilon))
        throw DomainError("knapp_stein_b: m and epsilon must have equal parity");
    int n = (std::abs(m) - epsilon) / 2;
    double sign = parity_mod2((m + std::abs(m)) / 2 - epsilon) == 0 ? 1.0 : -1.0;
    Complex ie = epsilon == 1 ? kI : Complex(1.0, 0.0);
    return kSqrtPi * ie * sign * pochhammer((1.0 + epsilon - mu) / 2.0, n) *
           reciprocal_gamma((mu + 1.0 + std::abs(1.0 * m)) / 2.0);
}

Complex hat_T_eigenvalue(int epsilon, int m, Complex mu) {
    if (epsilon != 1) throw DomainError("hat_T_eigenvalue: defined for epsilon = 1");
    if (parity_mod2(m) != 1) throw DomainError("hat_T_eigenvalue: m must be odd");
    return (m > 0 ? -kI : kI) * knapp_stein_b(1, m, mu);
}

Complex tony_d(int xi, int epsilon, Complex lambda, Complex mu) {
    int xe = parity_mod2(xi + epsilon);
    double sign = (xi == 1 && epsilon == 1) ? -1.0 : 1.0;  // (-1)^{floor((eps+xi)/2)}
    return sign * kSqrtPi * gamma((1.0 - lambda - mu + 2.0 * xe) / 4.0) *
           gamma((1.0 + lambda - mu + 2.0 * xi) / 4.0) *
           reciprocal_gamma((1.0 + lambda + mu + 2.0 * xe) / 4.0) *
           reciprocal_gamma((1.0 - lambda + mu + 2.0 * xi) / 4.0) *
           reciprocal_gamma((1.0 - mu + 1.0 * epsilon) / 2.0);
}

Complex riesz_u(const RieszParams& p, double x) {
    if (x == 0.0) throw DomainError("riesz_u: pointwise value needs x != 0");
    if (p.alpha.real() <= -1.0)
        throw DomainError("riesz_u: pointwise regime needs Re alpha > -1");
    Complex norm = std::pow(Complex(2.0, 0.0), -p.alpha / 2.0) *
                   reciprocal_gamma((p.alpha + 1.0 + 1.0 * p.parity) / 2.0);
    return norm * signed_power(x, {p.alpha, p.parity});
}

Complex riesz_convolution_constant(Complex alpha, int eps1, Complex beta, int eps2) {
    int pe = parity_mod2(eps1 + eps2);
    double sign = (eps1 == 1 && eps2 == 1) ? -1.0 : 1.0;
    return sign * kSqrtTwoPi * gamma((-1.0 - alpha - beta + 1.0 * pe) / 2.0) *
           reciprocal_gamma((-alpha + 1.0 * eps1) / 2.0) * reciprocal_gamma((-beta + 1.0 * eps2) / 2.0);
}

double KTypeCoefficients::l2k_norm_sq() const {
    double s = 0.0;
    for (const auto& [m, c] : coeffs) s += std::norm(c);
    return 2.0 * kPi * s;
}

// ---------------------------------------------------------------------------

ProfileTransforms ktype_profile_transforms(int m, const RadialProfile& h,
                                           const std::vector<Complex>& mus) {
    // Simpson grid in x; h enters as h_e(x/2), h_o(x/2)
    double smax = 1.0;
    for (const Complex& mu : mus) smax = std::max(smax, std::abs(mu.imag()));
    double T = 2.0 * h.support_radius(1e-18, std::abs(m) + 2.0) + 0.5;
    double ht = std::min(4e-3, 0.06 / (1.0 + smax / 2.0));
    int n = static_cast<int>(std::ceil(T / ht));
    if (n % 2 == 1) ++n;  // Simpson needs even interval count
    std::vector<double> ts(n + 1);
    for (int i = 0; i <= n; ++i) ts[i] = T * i / n;
    BasisSweep sweep(m, mus, ts);

    std::vector<double> g0(n + 1), g1(n + 1), wsimp(n + 1);
    const double hstep = T / n;
    for (int i = 0; i <= n; ++i) {
        double x = ts[i];
        double he = 0.5 * (h.eval(x / 2.0) + h.eval(-x / 2.0));
        double ho = 0.5 * (h.eval(x / 2.0) - h.eval(-x / 2.0));
        double cmh = std::pow(std::cosh(x), -0.5 * m);
        g0[i] = cmh * he * std::pow(std::cosh(x), m + 1);    // against phi
        g1[i] = ho * std::pow(std::cosh(x), 0.5 * m + 1.0);  // against psi
        wsimp[i] = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        wsimp[i] *= hstep / 3.0;
    }
    ProfileTransforms out;
    out.J0.resize(mus.size());
    out.J1.resize(mus.size());
    for (std::size_t k = 0; k < mus.size(); ++k) {
        Complex s0{0, 0}, s1{0, 0};
        for (int i = 0; i <= n; ++i) {
            s0 += wsimp[i] * g0[i] * sweep.phi(k, i);
            s1 += wsimp[i] * g1[i] * sweep.psi(k, i);
        }
        out.J0[k] = s0;
        out.J1[k] = s1;
    }
    return out;
}

Complex a_coef_unnormalized(int xi, int m, Complex mu, Complex J0m, Complex J1m) {
    return gamma((1.0 - mu) / 2.0) *
           (std::conj(omega(m, xi)) / 2.0 * c_small(-m, -mu) * J0m +
            kI / 4.0 * std::conj(omega(m, xi + 1)) * c_small(-m, -mu - 2.0) * J1m);
}

Complex a_coef_bold(int xi, int m, Complex mu, Complex J0m, Complex J1m) {
    return std::conj(omega(m, xi)) / 2.0 * c_small(-m, -mu) * J0m +
           kI / 4.0 * std::conj(omega(m, xi + 1)) * c_small(-m, -mu - 2.0) * J1m;
}

Complex alpha_tilde(int m, Complex mu) {
    Complex R = gamma((3.0 - mu) / 4.0) * reciprocal_gamma((1.0 - mu) / 4.0);
    Complex Rinv = gamma((1.0 - mu) / 4.0) * reciprocal_gamma((3.0 - mu) / 4.0);
    return 0.5 * c_small(-m, -mu) * (std::conj(omega(m, 0)) * R + std::conj(omega(m, 1)) * Rinv);
}

Complex beta_tilde(int m, Complex mu) {
    Complex R = gamma((3.0 - mu) / 4.0) * reciprocal_gamma((1.0 - mu) / 4.0);
    Complex Rinv = gamma((1.0 - mu) / 4.0) * reciprocal_gamma((3.0 - mu) / 4.0);
    return kI / 4.0 * c_small(-m, -mu - 2.0) *
           (std::conj(omega(m, 1)) * R + std::conj(omega(m, 0)) * Rinv);
}

Complex a_coef_bb(int m, Complex mu, Complex J0m, Complex J1m) {
    return alpha_tilde(m, mu) * J0m + beta_tilde(m, mu) * J1m;
}

Complex a_coef_cal(int m, Complex mu, Complex J0m, Complex J1m) {
    return a_coef_bold(0, m, mu, J0m, J1m);
}

// pole-free Pochhammer forms of the eps=0 combined-P envelope coefficients;
// exactly one omega branch is active for even m
Complex alpha_m_eps0(int m, Complex mu) {
    if (parity_mod2(m) != 0) throw DomainError("alpha_m_eps0: m must be even");
    double M = std::abs(m);
    Complex base = std::pow(Complex(2.0, 0.0), 1.0 - mu) * kPi * std::exp(kI * (m * kPi / 4.0));
    if (std::lround(M) % 4 == 0) {
        return omega(m, 0) * base * pochhammer((mu + 3.0 - M) / 4.0, std::lround(M) / 4) *
               reciprocal_gamma((mu + 3.0 + M) / 4.0) * reciprocal_gamma((mu + 1.0) / 4.0);
    }
    return omega(m, 1) * base * pochhammer((mu + 3.0 - M) / 4.0, (std::lround(M) - 2) / 4) *
           reciprocal_gamma((mu + 3.0 + M) / 4.0) * reciprocal_gamma((mu + 3.0) / 4.0);
}

Complex beta_m_eps0(int m, Complex mu) {
    if (parity_mod2(m) != 0) throw DomainError("beta_m_eps0: m must be even");
    double M = std::abs(m);
    Complex base = kI / 2.0 * std::pow(Complex(2.0, 0.0), 3.0 - mu) * kPi *
                   std::exp(kI * (m * kPi / 4.0));
    if (std::lround(M) % 4 == 0) {
        return omega(m, 0) * base * pochhammer((mu + 1.0 - M) / 4.0, std::lround(M) / 4) *
               reciprocal_gamma((mu + 1.0 + M) / 4.0) * reciprocal_gamma((mu + 3.0) / 4.0);
    }
    return omega(m, 1) * base * pochhammer((mu + 1.0 - M) / 4.0, (std::lround(M) + 2) / 4) *
           reciprocal_gamma((mu + 1.0 + M) / 4.0) * reciprocal_gamma((mu + 1.0) / 4.0);
}

Complex alpha_m_eps1(int m, Complex mu) {
    if (parity_mod2(m) != 1) throw DomainError("alpha_m_eps1: m must be odd");
    double sign = parity_mod2((std::abs(m) + 1) / 2) == 0 ? 1.0 : -1.0;
    return kI * sign * c_small(m, mu) * c_small(-m, -mu);
}

Complex beta_m_eps1(int m, Complex mu) {
    if (parity_mod2(m) != 1) throw DomainError("beta_m_eps1: m must be odd");
    double sign = parity_mod2((std::abs(m) + 1) / 2) == 0 ? 1.0 : -1.0;
    return 0.25 * kI * sign * c_small(m, mu - 2.0) * c_small(-m, -mu - 2.0);
}

namespace {

KTypeCoefficients map_terms(const HyperboloidFunction& f, Complex mu,
                            const std::function<Complex(int, Complex, Complex)>& builder) {
    f.validate();
    KTypeCoefficients out;
    out.epsilon = f.epsilon;
    out.mu = mu;
    for (const auto& term : f.terms) {
        ProfileTransforms tr = ktype_profile_transforms(term.m, term.profile, {mu});
        out.coeffs[term.m] = builder(term.m, tr.J0[0], tr.J1[0]);
    }
    return out;
}

}  // namespace

KTypeCoefficients A_on_ktype(int xi, const HyperboloidFunction& f, Complex mu) {
    if (f.lambda_imag != 0.0)
        throw DomainError("A_on_ktype: fast path requires lambda = 0 (see A_kernel_quadrature)");
    return map_terms(f, mu, [&](int m, Complex J0, Complex J1) {
        return a_coef_unnormalized(xi, m, mu, J0, J1);
    });
}

KTypeCoefficients combined_continuous_A(int xi, const HyperboloidFunction& f, Complex mu) {
    if (f.lambda_imag != 0.0) throw DomainError("combined_continuous_A: requires lambda = 0");
    return map_terms(f, mu,
                     [&](int m, Complex J0, Complex J1) { return a_coef_bold(xi, m, mu, J0, J1); });
}

KTypeCoefficients combined_discrete_eps0_A(const HyperboloidFunction& f, Complex mu) {
    if (f.epsilon != 0) throw DomainError("combined_discrete_eps0_A: epsilon must be 0");
    if (f.lambda_imag != 0.0) throw DomainError("combined_discrete_eps0_A: requires lambda = 0");
    return map_terms(f, mu,
                     [&](int m, Complex J0, Complex J1) { return a_coef_bb(m, mu, J0, J1); });
}

KTypeCoefficients combined_discrete_eps1_A(const HyperboloidFunction& f, Complex mu) {
    if (f.epsilon != 1) throw DomainError("combined_discrete_eps1_A: epsilon must be 1");
    if (f.lambda_imag != 0.0) throw DomainError("combined_discrete_eps1_A: requires lambda = 0");
    return map_terms(f, mu,
                     [&](int m, Complex J0, Complex J1) { return a_coef_cal(m, mu, J0, J1); });
}

Complex P_on_ktype(int xi, int epsilon, Complex mu, int m, CoordinatePoint p) {
    if (parity_mod2(m) != parity_mod2(epsilon))
        throw DomainError("P_on_ktype: m and epsilon parity mismatch");
    return gamma((mu + 1.0) / 2.0) * std::exp(kI * (m * p.theta)) *
           p_envelope_bold(xi, m, mu, p.u);
}

Complex p_envelope_bold(int xi, int m, Complex mu, double u) {
    double c2 = std::cosh(2.0 * u);
    return std::pow(c2, 0.5 * m) *
           (omega(m, xi) * c_small(m, mu) * jacobi::phi_m(m, mu, 2.0 * u) +
            kI / 2.0 * omega(m, xi + 1) * c_small(m, mu - 2.0) * jacobi::psi_m(m, mu, 2.0 * u));
}

Complex p_envelope_bb(int m, Complex mu, double u) {
    double c2 = std::cosh(2.0 * u);
    return std::pow(c2, 0.5 * m) * (alpha_m_eps0(m, mu) * jacobi::phi_m(m, mu, 2.0 * u) +
                                    beta_m_eps0(m, mu) * jacobi::psi_m(m, mu, 2.0 * u));
}

Complex p_envelope_cal(int m, Complex mu, double u) {
    double sign = parity_mod2((m + std::abs(m) - 2) / 2) == 0 ? 1.0 : -1.0;
    double c2 = std::cosh(2.0 * u);
    return sign * std::pow(c2, 0.5 * m) *
           (omega(m, 1) * c_small(m, mu) * jacobi::phi_m(m, mu, 2.0 * u) +
            kI / 2.0 * omega(m, 0) * c_small(m, mu - 2.0) * jacobi::psi_m(m, mu, 2.0 * u));
}

// ---------------------------------------------------------------------------

KTypeCoefficients A_kernel_quadrature(int xi, const HyperboloidFunction& f, Complex lambda,
                                      Complex mu, const QuadratureSpec& spec) {
    f.validate();
    KTypeCoefficients out;
    out.epsilon = f.epsilon;
    out.mu = mu;
    const Complex e1 = (-lambda - mu - 1.0) / 2.0;  // |z11| exponent
    const Complex e2 = (-mu + lambda - 1.0) / 2.0;  // |z21| exponent
    const int par1 = parity_mod2(xi + f.epsilon);
    const int par2 = parity_mod2(xi);
    const double s1 = std::max(0.0, -e1.real());
    const double s2 = std::max(0.0, -e2.real());

    for (const auto& term : f.terms) {
        HyperboloidFunction single{f.epsilon, f.lambda_imag, {term}};
        const double vmax = term.profile.support_radius(1e-15, 1.0 + std::abs(e2.real())) + 0.5;
        QuadratureSpec inner = spec;
        inner.abs_tol = std::max(spec.abs_tol * 1e-2, 1e-12);
        inner.max_subdivisions = std::max(spec.max_subdivisions, 400);

        auto inner_integral = [&](double th) -> Complex {
            const double z11 = std::cos(th);
            auto g = [&](double v) -> Complex {
                const double y = std::sinh(2.0 * v);
                const double z21 = -y * z11 + std::sin(th);
                if (z21 == 0.0 || z11 == 0.0) return {0.0, 0.0};
                Complex K = signed_power(z11, {e1, par1}) * signed_power(z21, {e2, par2});
                return K * geometry::section_eval_kn(single, th, y) * 0.5 * 2.0 *
                       std::cosh(2.0 * v);
            };
            // z21 vanishes at v* = asinh(tan th)/2
            const double tt = std::tan(th);
            const double vs = 0.5 * std::asinh(tt);
            Complex total{0.0, 0.0};
            if (vs > -vmax && vs < vmax) {
                Interval left = Interval::finite(-vmax, vs);
                left.singular_hi(s2);
                Interval right = Interval::finite(vs, vmax);
                right.singular_lo(s2);
                total += integrate_adaptive(g, left, inner).value;
                total += integrate_adaptive(g, right, inner).value;
            } else {
                total += integrate_adaptive(g, Interval::finite(-vmax, vmax), inner).value;
            }
            return total;
        };
        // z11 vanishes at th = pi/2
        Interval lo = Interval::finite(0.0, kPi / 2.0);
        lo.singular_hi(s1);
        Interval hi = Interval::finite(kPi / 2.0, kPi);
        hi.singular_lo(s1);
        QuadratureSpec outer = spec;
        Complex coef =
            integrate_adaptive(inner_integral, lo, outer).value +
            integrate_adaptive(inner_integral, hi, outer).value;
        out.coeffs[term.m] = coef;
    }
    return out;
}

// ---------------------------------------------------------------------------

Complex ankh_apply_section(const std::function<Complex(double, double)>& section, Complex lambda,
                           Complex nu, double theta, double y, double u_support,
                           const QuadratureSpec& spec) {
    if (std::abs(lambda - nu) < 1e-14) return section(theta, y);
    const Complex s = (lambda - nu) / 2.0;  // kernel |x|^{s-1}
    const Complex pref = 1.0 / (kSqrtPi * std::pow(Complex(2.0, 0.0), (lambda - nu) / 4.0)) *
                         gamma((2.0 + nu - lambda) / 4.0) * reciprocal_gamma((lambda - nu) / 4.0);
    auto psi = [&](double x) { return section(theta, y + x) + section(theta, y - x); };
    const Complex psi0 = psi(0.0);

    // inner: int_0^1 x^{s-1}(psi - psi0) dx + psi0/s, via x = e^{-v}
    auto inner_g = [&](double v) -> Complex {
        double x = std::exp(-v);
        return std::exp(-s * v) * (psi(x) - psi0);
    };
    QuadratureSpec qs = spec;
    Complex inner = integrate_adaptive(inner_g, Interval::finite(0.0, 40.0), qs).value + psi0 / s;

    // outer: int_1^inf x^{s-1} psi dx, via x = e^{w}
    const double W = std::log(std::sinh(2.0 * (u_support + 0.5)) + std::abs(y) + 2.0) + 1.0;
    auto outer_g = [&](double w) -> Complex {
        double x = std::exp(w);
        return std::exp(s * w) * psi(x);
    };
    Complex outer = integrate_adaptive(outer_g, Interval::finite(0.0, W), qs).value;
    return pref * (inner + outer);
}

Complex ankh_apply(const HyperboloidFunction& f, Complex nu, double theta, double y,
                   const QuadratureSpec& spec) {
    f.validate();
    if (std::abs(nu.real()) > 1e-14) throw DomainError("ankh_apply: nu must lie on iR");
    const Complex lambda = kI * f.lambda_imag;
    double usup = 0.0;
    for (const auto& t : f.terms) usup = std::max(usup, t.profile.support_radius(1e-15, 1.0));
    auto section = [&](double th, double yy) { return geometry::section_eval_kn(f, th, yy); };
    return ankh_apply_section(section, lambda, nu, theta, y, usup, spec);
}

}  // namespace hyppl::intertwine
