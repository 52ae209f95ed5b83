#include "hyppl/geometry.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "hyppl/derivative.hpp"

namespace hyppl::geometry {

GroupElement GroupElement::k_theta(double th) {
    return {std::cos(th), std::sin(th), -std::sin(th), std::cos(th)};
}
GroupElement GroupElement::b_u(double u) {
    return {std::cosh(u), std::sinh(u), std::sinh(u), std::cosh(u)};
}
GroupElement GroupElement::nbar(double x) { return {1.0, 0.0, x, 1.0}; }
GroupElement GroupElement::w0() { return {0.0, 1.0, -1.0, 0.0}; }
GroupElement GroupElement::diag(double t) {
    if (t == 0.0) throw DomainError("GroupElement::diag: t must be nonzero");
    return {t, 0.0, 0.0, 1.0 / t};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

GroupElement GroupElement::inverse() const { return {a22, -a12, -a21, a11}; }

void HyperboloidFunction::validate() const {
    std::set<int> seen;
    for (const auto& t : terms) {
        if (parity_mod2(t.m) != parity_mod2(epsilon)) {
            std::ostringstream os;
            os << "HyperboloidFunction: K-type m = " << t.m << " has wrong parity for epsilon = "
               << epsilon;
            throw DomainError(os.str());
        }
        if (!seen.insert(t.m).second) throw DomainError("HyperboloidFunction: duplicate K-type");
    }
}

Complex HyperboloidFunction::eval(CoordinatePoint p) const {
    Complex s{0.0, 0.0};
    for (const auto& t : terms) s += std::exp(kI * (t.m * p.theta)) * t.profile.eval(p.u);
    return s;
}

int HyperboloidFunction::max_abs_m() const {
    int mm = 0;
    for (const auto& t : terms) mm = std::max(mm, std::abs(t.m));
    return mm;
}

KBDecomposition kb_decompose(const GroupElement& g) {
    // X = g S g^{-1} with S = diag(1,-1) determines the coset:
    //   X = [[C cos 2th, -C sin 2th - Sh], [-C sin 2th + Sh, -C cos 2th]],
    // C = cosh 2u, Sh = sinh 2u.
    const GroupElement gi = g.inverse();
    const double x11 = g.a11 * gi.a11 - g.a12 * gi.a21;
    const double x12 = g.a11 * gi.a12 - g.a12 * gi.a22;
    const double x21 = g.a21 * gi.a11 - g.a22 * gi.a21;
    const double sh = 0.5 * (x21 - x12);
    const double u = 0.5 * std::asinh(sh);
    double th = 0.5 * std::atan2(-0.5 * (x12 + x21), x11);
    if (th < 0) th += kPi;
    if (th >= kPi) th -= kPi;
    const GroupElement kb = GroupElement::k_theta(th) * GroupElement::b_u(u);
    const GroupElement h = kb.inverse() * g;
    // h is diag(t, 1/t) exactly (the decomposition is global); the residual is
    // roundoff scaled by the magnitudes involved
    const double scale =
        std::max(std::abs(kb.a11) + std::abs(kb.a12), std::abs(kb.a21) + std::abs(kb.a22)) *
            (std::abs(g.a11) + std::abs(g.a12) + std::abs(g.a21) + std::abs(g.a22)) +
        1.0;
    if (std::abs(h.a12) + std::abs(h.a21) > 1e-10 * scale)
        throw DomainError("kb_decompose: MA part not diagonal (degenerate input)");
    return {th, u, h.a11};
}

GroupElement kn_coordinates(double theta, double y) {
    return GroupElement::k_theta(theta) * GroupElement::nbar(y);
}

Complex section_eval_kn(const HyperboloidFunction& f, double theta, double y) {
    const KBDecomposition d = kb_decompose(kn_coordinates(theta, y));
    // f(g h) = chi(h)^{-1} f(g), chi(diag(t,1/t)) = sgn(t)^eps |t|^{i lambda}
    double sgn = d.t < 0 ? -1.0 : 1.0;
    Complex chi_inv = (f.epsilon == 1 ? sgn : 1.0) *
                      std::exp(-kI * (f.lambda_imag * std::log(std::abs(d.t))));
    return chi_inv * f.eval({d.theta, d.u});
}

double invariant_norm_sq(const HyperboloidFunction& f, const QuadratureSpec& spec) {
    f.validate();
    // cross-K-type orthogonality: pi * sum_m int |h_m|^2 cosh(2u) du
    double total = 0.0;
    for (const auto& t : f.terms) {
        double R = t.profile.support_radius(1e-18, 2.0) + 1.0;
        auto g = [&](double u) -> Complex {
            double h = t.profile.eval(u);
            return Complex(h * h * std::cosh(2.0 * u), 0.0);
        };
        total += kPi * integrate_adaptive(g, Interval::finite(-R, R), spec).value.real();
    }
    return total;
}

double invariant_norm_sq_kn(const HyperboloidFunction& f, const QuadratureSpec& spec) {
    f.validate();
    // int_0^pi int_R |f(k_th nbar_y)|^2 (1/2) dy dtheta; substitute y = sinh(2v)
    // (the KB coordinate u of k_th nbar_y is v for every theta).
    double vmax = 0.0;
    for (const auto& t : f.terms) vmax = std::max(vmax, t.profile.support_radius(1e-16, 1.0));
    vmax += 1.0;
    QuadratureSpec inner = spec;
    inner.abs_tol = std::max(spec.abs_tol * 1e-2, 1e-13);
    auto outer = [&](double th) -> Complex {
        auto g = [&](double v) -> Complex {
            double y = std::sinh(2.0 * v);
            double a = std::abs(section_eval_kn(f, th, y));
            return Complex(0.5 * a * a * 2.0 * std::cosh(2.0 * v), 0.0);
        };
        return integrate_adaptive(g, Interval::finite(-vmax, vmax), inner).value;
    };
    return integrate_adaptive(outer, Interval::finite(0.0, kPi), spec).value.real();
}

Complex casimir_apply(const HyperboloidFunction& f, CoordinatePoint p) {
    f.validate();
    const double u = p.u;
    const double c2 = std::cosh(2.0 * u), t2 = std::tanh(2.0 * u);
    const Complex lam = kI * f.lambda_imag;
    Complex total{0.0, 0.0};
    for (const auto& term : f.terms) {
        const double h = term.profile.eval(u);
        const double hp = term.profile.deriv(u);
        const double hpp = term.profile.deriv2(u);
        const Complex im(0.0, static_cast<double>(term.m));
        Complex val = (lam * lam / (c2 * c2) + 2.0 * lam * t2 / c2 * im +
                       static_cast<double>(term.m) * static_cast<double>(term.m) / (c2 * c2)) *
                          h +
                      2.0 * t2 * hp + hpp;
        total += std::exp(kI * (term.m * p.theta)) * val;
    }
    return total;
}

Complex box_apply(int m, const std::function<Complex(double)>& h, double t) {
    double step = t != 0.0 ? std::min(0.1, 0.4 * std::abs(t)) : 0.1;  // stencil stays on t's side of 0
    Complex h0 = h(t);
    Complex h1 = differentiate(h, t, 1, step);
    Complex h2 = differentiate(h, t, 2, step);
    return static_cast<double>(m) * (m + 2.0) * h0 + 8.0 * (-1.0 + (3.0 + m) * t) * h1 -
           16.0 * t * (1.0 - t) * h2;
}

}  // namespace hyppl::geometry
