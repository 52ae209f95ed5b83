#include "hyppl/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyppl/gamma.hpp"
#include "hyppl/jacobi.hpp"

namespace hyppl::plancherel {

using intertwine::a_coef_bb;
using intertwine::a_coef_bold;
using intertwine::a_coef_cal;
using intertwine::hat_T_eigenvalue;
using intertwine::knapp_stein_b;
using intertwine::ktype_profile_transforms;
using intertwine::ProfileTransforms;

Complex a_density(int epsilon, Complex mu) {
    if (epsilon == 1) return std::pow(2.0, 1.5) * kPi * reciprocal_gamma((mu + 2.0) / 2.0);
    return std::pow(2.0, 1.5) * kPi * gamma(mu / 2.0) * reciprocal_gamma((1.0 + mu) / 2.0) *
           reciprocal_gamma((1.0 + mu) / 2.0);
}

double a_weight_inv(int epsilon, double s) {
    double se = std::max(std::abs(s), 1e-7);
    Complex mu(0.0, se);
    if (epsilon == 1) {
        Complex a = std::pow(2.0, 1.5) * kPi * reciprocal_gamma((mu + 2.0) / 2.0);
        return 1.0 / std::norm(a);
    }
    Complex ainv = reciprocal_gamma(mu / 2.0) * gamma((1.0 + mu) / 2.0) * gamma((1.0 + mu) / 2.0) /
                   (std::pow(2.0, 1.5) * kPi);
    return std::norm(ainv);
}

Complex sigma_weight(Complex mu) {
    Complex r1 = reciprocal_gamma((1.0 + mu) / 4.0) * reciprocal_gamma((1.0 - mu) / 4.0);
    Complex r2 = reciprocal_gamma((3.0 + mu) / 4.0) * reciprocal_gamma((3.0 - mu) / 4.0);
    return r1 * r1 + r2 * r2;
}

namespace {

void check_lattice(int epsilon, double mu) {
    double k = (1.0 - epsilon - mu) / 2.0;
    if (mu >= 0.0 || std::abs(k - std::round(k)) > 1e-9)
        throw DomainError("discrete lattice point expected in 1 - eps - 2N");
}

}  // namespace

double discrete_coefficient(int epsilon, double mu) {
    check_lattice(epsilon, mu);
    if (epsilon == 0) {
        Complex v = gamma(Complex(1.0 - mu, 0.0)) * reciprocal_gamma(Complex(-mu / 2.0, 0.0)) /
                    sigma_weight(Complex(mu, 0.0));
        return v.real() / (4.0 * kPi * kPi * kPi);
    }
    Complex v = gamma(Complex(-mu, 0.0)) * mu * mu * reciprocal_gamma(Complex((1.0 - mu) / 2.0, 0.0));
    return v.real() / (4.0 * kPi);
}

double discrete_coefficient_paper_ratio(int epsilon) {
    return epsilon == 0 ? kPi * kPi / 4.0 : 2.0;
}

double discrete_norm_sq(const DiscreteNormSpec& spec, const KTypeCoefficients& F) {
    if (F.epsilon != spec.epsilon) throw DomainError("discrete_norm_sq: epsilon mismatch");
    if (std::abs(F.mu - Complex(spec.mu, 0.0)) > 1e-9)
        throw DomainError("discrete_norm_sq: coefficient family evaluated at a different mu");
    check_lattice(spec.epsilon, spec.mu);
    double total = 0.0;
    for (const auto& [m, c] : F.coeffs) {
        Complex eig = spec.epsilon == 0 ? knapp_stein_b(0, m, Complex(spec.mu, 0.0))
                                        : hat_T_eigenvalue(1, m, Complex(spec.mu, 0.0));
        if (std::abs(eig.imag()) > 1e-10 * (1.0 + std::abs(eig)))
            throw ConsistencyError("discrete_norm_sq: eigenvalue has a large imaginary part");
        total += eig.real() * std::norm(c);
    }
    total *= 2.0 * kPi;
    if (total < -1e-9) throw ConsistencyError("discrete_norm_sq: negative norm");
    return std::max(0.0, total);
}

ContinuousPart continuous_part(const HyperboloidFunction& f, const SpectralGridSpec& grid) {
    f.validate();
    if (f.lambda_imag != 0.0)
        throw DomainError("continuous_part: lambda = 0 fast path (use verify_plancherel_lambda)");
    auto nodes = spectral_nodes(grid);
    std::vector<Complex> mus(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) mus[i] = Complex(0.0, nodes[i].first);

    std::map<int, ProfileTransforms> tr;
    for (const auto& term : f.terms)
        tr[term.m] = ktype_profile_transforms(term.m, term.profile, mus);

    ContinuousPart out;
    out.integrand.reserve(nodes.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [s, w] = nodes[i];
        double aw = a_weight_inv(f.epsilon, s);
        double val = 0.0;
        for (const auto& term : f.terms) {
            const auto& t = tr[term.m];
            for (int xi : {0, 1}) {
                Complex c = a_coef_bold(xi, term.m, mus[i], t.J0[i], t.J1[i]);
                val += 2.0 * kPi * std::norm(c);
            }
        }
        val *= aw;
        out.integrand.emplace_back(s, val);
        out.value += w * val;
        peak = std::max(peak, val);
    }
    out.tail_estimate = peak > 0.0 ? out.integrand.back().second / peak : 0.0;
    return out;
}

std::vector<std::pair<double, double>> discrete_part(const HyperboloidFunction& f) {
    f.validate();
    if (f.lambda_imag != 0.0) throw DomainError("discrete_part: requires lambda = 0");
    std::vector<std::pair<double, double>> out;
    int maxm = f.max_abs_m();
    for (double mu = 1.0 - f.epsilon - 2.0; mu >= 1.0 - maxm - 0.5; mu -= 2.0) {
        KTypeCoefficients F;
        F.epsilon = f.epsilon;
        F.mu = Complex(mu, 0.0);
        for (const auto& term : f.terms) {
            ProfileTransforms t = ktype_profile_transforms(term.m, term.profile, {Complex(mu, 0.0)});
            F.coeffs[term.m] = f.epsilon == 0 ? a_coef_bb(term.m, F.mu, t.J0[0], t.J1[0])
                                              : a_coef_cal(term.m, F.mu, t.J0[0], t.J1[0]);
        }
        double contrib = discrete_coefficient(f.epsilon, mu) * discrete_norm_sq({f.epsilon, mu}, F);
        out.emplace_back(mu, contrib);
    }
    return out;
}

PlancherelReport verify_plancherel(const HyperboloidFunction& f, const SpectralGridSpec& grid,
                                   const QuadratureSpec& spec) {
    PlancherelReport rep;
    rep.lhs_norm_sq = geometry::invariant_norm_sq(f, spec);
    ContinuousPart cont = continuous_part(f, grid);
    rep.continuous_part = cont.value;
    rep.integrand = std::move(cont.integrand);
    rep.tail_estimate = cont.tail_estimate;
    rep.discrete_terms = discrete_part(f);
    rep.rhs_total = rep.continuous_part;
    for (const auto& [mu, c] : rep.discrete_terms) rep.rhs_total += c;
    rep.ratio = rep.lhs_norm_sq == 0.0 ? (rep.rhs_total == 0.0 ? 1.0 : 0.0)
                                       : rep.rhs_total / rep.lhs_norm_sq;

    // per-K-type share: run the single-term pieces (K-types are orthogonal)
    if (f.terms.size() > 1) {
        for (const auto& term : f.terms) {
            HyperboloidFunction single{f.epsilon, 0.0, {term}};
            ContinuousPart c1 = continuous_part(single, grid);
            double tot = c1.value;
            for (const auto& [mu, c] : discrete_part(single)) tot += c;
            rep.per_ktype[term.m] = tot;
        }
    } else if (f.terms.size() == 1) {
        rep.per_ktype[f.terms[0].m] = rep.rhs_total;
    }
    return rep;
}

InversionResult verify_inversion(const HyperboloidFunction& f, CoordinatePoint p,
                                 const SpectralGridSpec& grid, bool ablate_discrete) {
    f.validate();
    if (f.lambda_imag != 0.0) throw DomainError("verify_inversion: requires lambda = 0");
    auto nodes = spectral_nodes(grid);
    std::vector<Complex> mus(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) mus[i] = Complex(0.0, nodes[i].first);

    Complex rec{0.0, 0.0};
    for (const auto& term : f.terms) {
        const int m = term.m;
        ProfileTransforms tr = ktype_profile_transforms(m, term.profile, mus);
        // basis values phi/psi at (mu, 2u) for the P envelopes, one sweep
        jacobi::BasisSweep sweep(m, mus, {2.0 * std::abs(p.u)});
        const double sgn_u = p.u < 0 ? -1.0 : 1.0;  // phi even, psi odd in u
        const Complex zeta = std::exp(kI * (m * p.theta));
        const double c2m = std::pow(std::cosh(2.0 * p.u), 0.5 * m);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            auto [s, w] = nodes[i];
            double aw = a_weight_inv(f.epsilon, s);
            Complex phim = sweep.phi(i, 0);
            Complex psim = sgn_u * sweep.psi(i, 0);
            Complex sum_xi{0.0, 0.0};
            for (int xi : {0, 1}) {
                Complex ac = a_coef_bold(xi, m, mus[i], tr.J0[i], tr.J1[i]);
                Complex env =
                    c2m * (intertwine::omega(m, xi) * intertwine::c_small(m, mus[i]) * phim +
                           kI / 2.0 * intertwine::omega(m, xi + 1) *
                               intertwine::c_small(m, mus[i] - 2.0) * psim);
                sum_xi += ac * env;
            }
            rec += w * aw * zeta * sum_xi;
        }
        if (!ablate_discrete) {
            for (double mu0 = 1.0 - f.epsilon - 2.0; mu0 >= 1.0 - std::abs(m) - 0.5; mu0 -= 2.0) {
                ProfileTransforms td = ktype_profile_transforms(m, term.profile, {Complex(mu0, 0.0)});
                if (f.epsilon == 0) {
                    Complex ac = a_coef_bb(m, Complex(mu0, 0.0), td.J0[0], td.J1[0]);
                    Complex env = intertwine::p_envelope_bb(m, Complex(mu0, 0.0), p.u);
                    rec += (-mu0 / sigma_weight(Complex(mu0, 0.0))) / (8.0 * kPi * kPi * kPi) * ac *
                           env * zeta;
                } else {
                    Complex ac = a_coef_cal(m, Complex(mu0, 0.0), td.J0[0], td.J1[0]);
                    Complex env = intertwine::p_envelope_cal(m, Complex(mu0, 0.0), p.u);
                    rec += mu0 / (4.0 * kPi * kI) * ac * env * zeta;
                }
            }
        }
    }
    InversionResult out;
    out.reconstructed = rec;
    out.abs_error = std::abs(rec - f.eval(p));
    return out;
}

KTypeCoefficients lambda_extended_A(int xi, const HyperboloidFunction& f, Complex mu,
                                    const QuadratureSpec& spec) {
    Complex lambda = kI * f.lambda_imag;
    KTypeCoefficients raw = intertwine::A_kernel_quadrature(xi, f, lambda, mu, spec);
    Complex norm = reciprocal_gamma((1.0 - mu) / 2.0);
    for (auto& [m, c] : raw.coeffs) c *= norm;
    return raw;
}

namespace {

KTypeCoefficients lambda_combined(const HyperboloidFunction& f, Complex mu,
                                  const QuadratureSpec& spec, bool bb) {
    Complex lambda = kI * f.lambda_imag;
    KTypeCoefficients a0 = intertwine::A_kernel_quadrature(0, f, lambda, mu, spec);
    Complex pref = std::pow(Complex(2.0, 0.0), (1.0 + mu) / 2.0) * kSqrtPi;
    Complex w0, w1;
    if (bb) {
        w0 = pref * gamma((1.0 + mu + lambda) / 4.0) * reciprocal_gamma((1.0 - mu) / 4.0) *
             reciprocal_gamma((1.0 + mu) / 4.0) * reciprocal_gamma((1.0 - mu - lambda) / 4.0);
        w1 = pref * gamma((3.0 + mu + lambda) / 4.0) * reciprocal_gamma((3.0 - mu) / 4.0) *
             reciprocal_gamma((3.0 + mu) / 4.0) * reciprocal_gamma((3.0 - mu - lambda) / 4.0);
    } else {
        w0 = pref * gamma((1.0 + mu + lambda) / 4.0) * reciprocal_gamma((1.0 - mu) / 4.0) *
             reciprocal_gamma((3.0 + mu) / 4.0) * reciprocal_gamma((1.0 - mu - lambda) / 4.0);
        w1 = {0.0, 0.0};
    }
    KTypeCoefficients out;
    out.epsilon = f.epsilon;
    out.mu = mu;
    if (w1 != Complex(0.0, 0.0)) {
        KTypeCoefficients a1 = intertwine::A_kernel_quadrature(1, f, lambda, mu, spec);
        for (const auto& [m, c] : a0.coeffs) out.coeffs[m] = w0 * c + w1 * a1.coeffs.at(m);
    } else {
        for (const auto& [m, c] : a0.coeffs) out.coeffs[m] = w0 * c;
    }
    return out;
}

}  // namespace

KTypeCoefficients lambda_extended_Abb(const HyperboloidFunction& f, Complex mu,
                                      const QuadratureSpec& spec) {
    if (f.epsilon != 0) throw DomainError("lambda_extended_Abb: epsilon must be 0");
    return lambda_combined(f, mu, spec, true);
}

KTypeCoefficients lambda_extended_Acal(const HyperboloidFunction& f, Complex mu,
                                       const QuadratureSpec& spec) {
    if (f.epsilon != 1) throw DomainError("lambda_extended_Acal: epsilon must be 1");
    return lambda_combined(f, mu, spec, false);
}

PlancherelReport verify_plancherel_lambda(const HyperboloidFunction& f,
                                          const SpectralGridSpec& grid,
                                          const QuadratureSpec& spec) {
    f.validate();
    PlancherelReport rep;
    rep.lhs_norm_sq = geometry::invariant_norm_sq_kn(f, spec);
    auto nodes = spectral_nodes(grid);
    double peak = 0.0;
    for (auto [s, w] : nodes) {
        Complex mu(0.0, s);
        double val = 0.0;
        for (int xi : {0, 1}) {
            KTypeCoefficients c = lambda_extended_A(xi, f, mu, spec);
            val += c.l2k_norm_sq();
        }
        val *= a_weight_inv(f.epsilon, s);
        rep.integrand.emplace_back(s, val);
        rep.continuous_part += w * val;
        peak = std::max(peak, val);
    }
    rep.tail_estimate = peak > 0.0 ? rep.integrand.back().second / peak : 0.0;
    int maxm = f.max_abs_m();
    for (double mu = 1.0 - f.epsilon - 2.0; mu >= 1.0 - maxm - 0.5; mu -= 2.0) {
        KTypeCoefficients F = f.epsilon == 0 ? lambda_extended_Abb(f, Complex(mu, 0.0), spec)
                                             : lambda_extended_Acal(f, Complex(mu, 0.0), spec);
        double contrib = discrete_coefficient(f.epsilon, mu) * discrete_norm_sq({f.epsilon, mu}, F);
        rep.discrete_terms.emplace_back(mu, contrib);
    }
    rep.rhs_total = rep.continuous_part;
    for (const auto& [mu, c] : rep.discrete_terms) rep.rhs_total += c;
    rep.ratio = rep.lhs_norm_sq == 0.0 ? (rep.rhs_total == 0.0 ? 1.0 : 0.0)
                                       : rep.rhs_total / rep.lhs_norm_sq;
    return rep;
}

double duality_check(int xi, int m0, const HyperboloidFunction& g, Complex mu,
                     const QuadratureSpec& spec) {
    g.validate();
    const jacobi::RadialProfile* prof = nullptr;
    for (const auto& t : g.terms)
        if (t.m == m0) prof = &t.profile;
    Complex lhs{0.0, 0.0};
    if (prof) {
        double R = prof->support_radius(1e-17, std::abs(m0) + 2.0) + 0.5;
        auto igr = [&](double u) -> Complex {
            return gamma((mu + 1.0) / 2.0) * intertwine::p_envelope_bold(xi, m0, mu, u) *
                   prof->eval(u) * std::cosh(2.0 * u);
        };
        lhs = kPi * integrate_adaptive(igr, Interval::finite(-R, R), spec).value;
    }
    KTypeCoefficients ac = intertwine::A_on_ktype(xi, g, -std::conj(mu));
    Complex rhs = ac.coeffs.count(m0) ? 2.0 * kPi * std::conj(ac.coeffs.at(m0)) : Complex{0.0, 0.0};
    double denom = std::abs(lhs) + std::abs(rhs);
    if (denom == 0.0) return 0.0;
    return std::abs(lhs - rhs) / denom;
}

}  // namespace hyppl::plancherel
