#include "hyppl/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "hyppl/gamma.hpp"
#include "hyppl/hyp2f1.hpp"

namespace hyppl {

std::vector<std::pair<double, double>> spectral_nodes(const SpectralGridSpec& grid) {
    std::vector<std::pair<double, double>> nodes;
    if (grid.n_points < 16) throw DomainError("spectral grid: n_points must be >= 16");
    if (grid.s_max <= 0) throw DomainError("spectral grid: s_max must be > 0");
    if (grid.rule == SpectralRule::uniform_trapezoid) {
        int n = grid.n_points;
        double h = grid.s_max / (n - 1);
        nodes.reserve(n);
        for (int i = 0; i < n; ++i) {
            double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
            nodes.emplace_back(i * h, w);
        }
        return nodes;
    }
    // composite 16-point Gauss-Legendre panels
    static const std::array<double, 8> x = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
    };
    static const std::array<double, 8> w = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
    };
    int panels = std::max(1, grid.n_points / 16);
    double pw = grid.s_max / panels;
    for (int p = 0; p < panels; ++p) {
        double c = (p + 0.5) * pw, h = 0.5 * pw;
        for (int i = 0; i < 8; ++i) {
            nodes.emplace_back(c - h * x[i], h * w[i]);
            nodes.emplace_back(c + h * x[i], h * w[i]);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

}  // namespace hyppl

namespace hyppl::jacobi {

void JacobiSpec::validate() const {
    if (std::abs(alpha.imag()) < 1e-12) {
        double r = std::round(alpha.real());
        if (r < 0 && std::abs(alpha.real() - r) < 1e-12)
            throw DomainError("JacobiSpec: alpha must not be a negative integer");
    }
    if (beta.real() <= -1.0) throw DomainError("JacobiSpec: need Re beta > -1");
}

Complex jacobi_phi(const JacobiSpec& spec, Complex mu, double t, bool printed_second_parameter) {
    spec.validate();
    Complex rho = spec.alpha + spec.beta + 1.0;
    double z = -std::sinh(t) * std::sinh(t);
    Complex a = (rho + mu) / 2.0;
    Complex b = printed_second_parameter ? (spec.alpha - spec.beta + 1.0 + mu) / 2.0 : (rho - mu) / 2.0;
    return hyp2f1(a, b, spec.alpha + 1.0, z);
}

Complex phi_m(int m, Complex mu, double x) {
    double z = -std::sinh(x) * std::sinh(x);
    return hyp2f1((1.0 + m + mu) / 4.0, (1.0 + m - mu) / 4.0, Complex(0.5, 0.0), z);
}

Complex psi_m(int m, Complex mu, double x) {
    double z = -std::sinh(x) * std::sinh(x);
    return kI * std::sinh(x) *
           hyp2f1((3.0 + m + mu) / 4.0, (3.0 + m - mu) / 4.0, Complex(1.5, 0.0), z);
}

BasisSweep::BasisSweep(int m, std::vector<Complex> mus, std::vector<double> ts)
    : mus_(std::move(mus)), ts_(std::move(ts)) {
    const std::size_t nmu = mus_.size(), nt = ts_.size();
    phi_.assign(nmu, std::vector<Complex>(nt));
    psi_.assign(nmu, std::vector<Complex>(nt));
    if (nt == 0) return;
    if (ts_.front() < 0.0 || !std::is_sorted(ts_.begin(), ts_.end()))
        throw DomainError("BasisSweep: ts must be ascending and non-negative");

    double om_max = 1.0;
    std::vector<Complex> lam(nmu);
    for (std::size_t k = 0; k < nmu; ++k) {
        lam[k] = (Complex(1.0 + m, 0.0) * Complex(1.0 + m, 0.0) - mus_[k] * mus_[k]) / 4.0;
        om_max = std::max(om_max, std::sqrt(std::abs(lam[k])));
    }
    const double hmax = std::min(2e-3, 0.04 / om_max);

    // state per mu: (phi, phi', psi, psi')
    std::vector<std::array<Complex, 4>> y(nmu);
    for (std::size_t k = 0; k < nmu; ++k) y[k] = {Complex(1, 0), Complex(0, 0), Complex(0, 0), kI};

    auto rhs = [&](double t, const std::vector<std::array<Complex, 4>>& s,
                   std::vector<std::array<Complex, 4>>& d) {
        double p = (m + 1) * std::tanh(t);
        for (std::size_t k = 0; k < nmu; ++k) {
            d[k][0] = s[k][1];
            d[k][1] = -p * s[k][1] - lam[k] * s[k][0];
            d[k][2] = s[k][3];
            d[k][3] = -p * s[k][3] - lam[k] * s[k][2];
        }
    };

    std::vector<std::array<Complex, 4>> k1(nmu), k2(nmu), k3(nmu), k4(nmu), tmp(nmu);
    double t = 0.0;
    std::size_t it = 0;
    // record any leading ts at 0
    while (it < nt && ts_[it] == 0.0) {
        for (std::size_t k = 0; k < nmu; ++k) {
            phi_[k][it] = y[k][0];
            psi_[k][it] = y[k][2];
        }
        ++it;
    }
    while (it < nt) {
        double target = ts_[it];
        int nsub = std::max(1, static_cast<int>(std::ceil((target - t) / hmax)));
        double h = (target - t) / nsub;
        for (int s = 0; s < nsub; ++s) {
            rhs(t, y, k1);
            for (std::size_t k = 0; k < nmu; ++k)
                for (int i = 0; i < 4; ++i) tmp[k][i] = y[k][i] + 0.5 * h * k1[k][i];
            rhs(t + 0.5 * h, tmp, k2);
            for (std::size_t k = 0; k < nmu; ++k)
                for (int i = 0; i < 4; ++i) tmp[k][i] = y[k][i] + 0.5 * h * k2[k][i];
            rhs(t + 0.5 * h, tmp, k3);
            for (std::size_t k = 0; k < nmu; ++k)
                for (int i = 0; i < 4; ++i) tmp[k][i] = y[k][i] + h * k3[k][i];
            rhs(t + h, tmp, k4);
            for (std::size_t k = 0; k < nmu; ++k)
                for (int i = 0; i < 4; ++i)
                    y[k][i] += h / 6.0 * (k1[k][i] + 2.0 * k2[k][i] + 2.0 * k3[k][i] + k4[k][i]);
            t += h;
        }
        t = target;
        for (std::size_t k = 0; k < nmu; ++k) {
            phi_[k][it] = y[k][0];
            psi_[k][it] = y[k][2];
        }
        ++it;
    }
}

namespace {

Complex l_weight_direct(KTypeJacobiSlot slot, Complex mu) {
    return gamma(mu / 2.0) * reciprocal_gamma((mu + 1.0 + 2.0 * slot.j + std::abs(1.0 * slot.m)) / 4.0) *
           reciprocal_gamma((mu + 1.0 + 2.0 * slot.j - std::abs(1.0 * slot.m)) / 4.0);
}

}  // namespace

Complex l_weight(KTypeJacobiSlot slot, Complex mu) {
    if (slot.j != 0 && slot.j != 1) throw DomainError("l_weight: j must be 0 or 1");
    if (!is_nonpositive_integer(mu / 2.0)) return l_weight_direct(slot, mu);
    // numerator pole; a denominator pole may cancel it
    Complex a1 = (mu + 1.0 + 2.0 * slot.j + std::abs(1.0 * slot.m)) / 4.0;
    Complex a2 = (mu + 1.0 + 2.0 * slot.j - std::abs(1.0 * slot.m)) / 4.0;
    if (!is_nonpositive_integer(a1) && !is_nonpositive_integer(a2)) {
        return {std::numeric_limits<double>::infinity(), 0.0};  // pole marker
    }
    // both degenerate: finite limit, take it numerically
    const double h = 1e-6;
    Complex v1 = l_weight_direct(slot, mu + h);
    Complex v2 = l_weight_direct(slot, mu + 0.5 * h);
    return 2.0 * v2 - v1;  // Richardson, O(h^2)
}

double l_weight_inv_abs_sq(KTypeJacobiSlot slot, double s) {
    double se = std::max(std::abs(s), 1e-7);  // analytic limit at s = 0
    Complex mu(0.0, se);
    Complex inv = reciprocal_gamma(mu / 2.0) *
                  gamma((mu + 1.0 + 2.0 * slot.j + std::abs(1.0 * slot.m)) / 4.0) *
                  gamma((mu + 1.0 + 2.0 * slot.j - std::abs(1.0 * slot.m)) / 4.0);
    return std::norm(inv);
}

Complex c_jacobi(const JacobiSpec& spec, Complex mu) {
    spec.validate();
    Complex abs_beta = spec.beta.real() >= 0.0 ? spec.beta : -spec.beta;
    if (is_nonpositive_integer(mu)) {
        Complex d1 = (spec.alpha + abs_beta + 1.0 + mu) / 2.0;
        Complex d2 = (spec.alpha - abs_beta + 1.0 + mu) / 2.0;
        if (!is_nonpositive_integer(d1) && !is_nonpositive_integer(d2))
            return {std::numeric_limits<double>::infinity(), 0.0};  // pole marker
    }
    return gamma(mu) * gamma(spec.alpha + 1.0) *
           reciprocal_gamma((spec.alpha + abs_beta + 1.0 + mu) / 2.0) *
           reciprocal_gamma((spec.alpha - abs_beta + 1.0 + mu) / 2.0);
}

DiscreteSpectrum discrete_set(KTypeJacobiSlot slot) {
    DiscreteSpectrum d;
    for (int k = 0;; ++k) {
        double eta = 4.0 * k + 1.0 + 2.0 * slot.j - std::abs(1.0 * slot.m);
        if (eta >= 0.0) break;
        d.points.push_back(eta);
    }
    for (double mu0 : d.points) d.residue_weights.push_back(residue_weight(slot, mu0));
    return d;
}

Complex residue_weight(KTypeJacobiSlot slot, double mu0) {
    auto g = [&](Complex nu) {
        return 1.0 / (l_weight_direct(slot, nu) * l_weight_direct(slot, -nu));
    };
    // h g(mu0 + h) = Res + c1 h + c2 h^2 + ...  -> Neville in h
    constexpr int kN = 9;
    std::array<Complex, kN> tab;
    std::array<double, kN> hs;
    for (int i = 0; i < kN; ++i) {
        hs[i] = 0.128 / (1 << i);
        tab[i] = hs[i] * g(Complex(mu0 + hs[i], 0.0));
    }
    for (int lev = 1; lev < kN; ++lev) {
        for (int i = kN - 1; i >= lev; --i) {
            tab[i] = (tab[i] * hs[i - lev] - tab[i - 1] * hs[i]) / (hs[i - lev] - hs[i]);
        }
    }
    Complex res = tab[kN - 1];
    double agree = std::abs(tab[kN - 1] - tab[kN - 2]);
    if (agree > 1e-7 * std::max(1.0, std::abs(res)))
        throw NumericError("residue_weight: extrapolation did not settle", res, agree);
    return res;
}

namespace {

double forward_truncation(const std::function<Complex(double)>& f, KTypeJacobiSlot slot,
                          Complex mu) {
    // scan an envelope of the integrand: |f| against the measure and the
    // worst-case kernel growth cosh^{(m+1)/2 + |Re mu|/2}
    double expo = std::max(slot.m + 1.0, 0.5 * (slot.m + 1.0) + 0.5 * std::abs(mu.real())) + 1.0;
    double peak = 0.0;
    double T = 1.0;
    int below = 0;
    for (double t = 0.0; t < 40.0; t += 0.5) {
        double mag = std::abs(f(t)) * std::pow(std::cosh(t), expo);
        peak = std::max(peak, mag);
        if (peak > 0.0 && mag < 1e-16 * peak) {
            if (++below >= 2) {
                T = t + 0.5;
                break;
            }
        } else {
            below = 0;
            T = t + 1.0;
        }
    }
    return T;
}

}  // namespace

namespace {

// composite 16-point Gauss-Legendre sum of f(t) * basis(t) * weight(t) on
// [0, T], with the basis values supplied by one ODE sweep over all nodes
Complex fj_panel_sum(const std::function<Complex(double)>& f, KTypeJacobiSlot slot, Complex mu,
                     double T, int npanels) {
    static const std::array<double, 8> xg = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499,
    };
    static const std::array<double, 8> wg = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541,
    };
    std::vector<double> ts;
    std::vector<double> weights;
    ts.reserve(16 * npanels);
    double pw = T / npanels;
    for (int p = 0; p < npanels; ++p) {
        double c = (p + 0.5) * pw, h = 0.5 * pw;
        for (int i = 7; i >= 0; --i) {
            ts.push_back(c - h * xg[i]);
            weights.push_back(h * wg[i]);
        }
        for (int i = 0; i < 8; ++i) {
            ts.push_back(c + h * xg[i]);
            weights.push_back(h * wg[i]);
        }
    }
    BasisSweep sweep(slot.m, {mu}, ts);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < ts.size(); ++i) {
        double t = ts[i];
        double w = std::pow(std::cosh(t), slot.m + 1);
        Complex kern = slot.j == 0 ? sweep.phi(0, i) : sweep.psi(0, i) * std::sinh(t);
        acc += weights[i] * f(t) * kern * w;
    }
    return acc;
}

}  // namespace

Complex fj_forward(const std::function<Complex(double)>& f, KTypeJacobiSlot slot, Complex mu,
                   const QuadratureSpec& spec) {
    if (slot.j != 0 && slot.j != 1) throw DomainError("fj_forward: j must be 0 or 1");
    double T = forward_truncation(f, slot, mu);
    // panel width resolving the spectral oscillation; refine once as a check
    double om = 1.0 + 0.5 * std::abs(mu);
    int npanels = std::max(10, static_cast<int>(std::ceil(T * om / 4.0)));
    Complex coarse = fj_panel_sum(f, slot, mu, T, npanels);
    Complex fine = fj_panel_sum(f, slot, mu, T, npanels * 2);
    double err = std::abs(fine - coarse);
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(fine))) {
        Complex finest = fj_panel_sum(f, slot, mu, T, npanels * 4);
        err = std::abs(finest - fine);
        if (err > 1e3 * std::max(spec.abs_tol, spec.rel_tol * std::abs(finest)))
            throw NumericError("fj_forward: quadrature did not settle", finest, err);
        return finest;
    }
    return fine;
}

FjInversion fj_invert(KTypeJacobiSlot slot, const std::function<Complex(Complex)>& Jf, double t,
                      const SpectralGridSpec& grid, bool drop_discrete) {
    if (slot.j != 0 && slot.j != 1) throw DomainError("fj_invert: j must be 0 or 1");
    auto nodes = spectral_nodes(grid);
    std::vector<Complex> mus(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) mus[i] = Complex(0.0, nodes[i].first);
    BasisSweep sweep(slot.m, mus, {t});

    Complex cont{0.0, 0.0};
    double peak = 0.0, last = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [s, w] = nodes[i];
        Complex kern = slot.j == 0 ? sweep.phi(i, 0) : sweep.psi(i, 0);
        Complex val = Jf(mus[i]) * kern * l_weight_inv_abs_sq(slot, s);
        cont += w * val;
        peak = std::max(peak, std::abs(val));
        last = std::abs(val);
    }
    cont *= slot.j == 0 ? Complex(1.0 / (4.0 * kPi * kPi), 0.0) : Complex(-1.0 / (kPi * kPi), 0.0);

    FjInversion out;
    out.tail_fraction = peak > 0.0 ? last / peak : 0.0;
    out.tail_warning = out.tail_fraction > 1e-6;
    out.value = cont;
    if (!drop_discrete) {
        DiscreteSpectrum d = discrete_set(slot);
        double fac = residue_parity_factor(slot.m);
        for (std::size_t i = 0; i < d.points.size(); ++i) {
            double mu0 = d.points[i];
            Complex kern = slot.j == 0 ? phi_m(slot.m, mu0, t) : psi_m(slot.m, mu0, t);
            Complex term = Jf(Complex(mu0, 0.0)) * kern * d.residue_weights[i] * fac;
            out.value += (slot.j == 0 ? -1.0 / (2.0 * kPi) : 2.0 / kPi) * term;
        }
    }
    return out;
}

}  // namespace hyppl::jacobi
