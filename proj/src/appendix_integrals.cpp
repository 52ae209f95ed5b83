#include "hyppl/appendix_integrals.hpp"

#include <cmath>
#include <sstream>

#include "hyppl/gamma.hpp"

namespace hyppl {

Complex casselman_integral_quad(Complex alpha, Complex beta, const QuadratureSpec& spec) {
    if (alpha.real() + beta.real() <= 1.0)
        throw DomainError("casselman integral: need Re(alpha+beta) > 1 for absolute convergence");
    // x = tan v maps R to (-pi/2, pi/2); integrand ~ cos(v)^{a+b-2} at the ends
    auto g = [&](double v) {
        double x = std::tan(v);
        Complex val = std::pow(Complex(x, -1.0), -alpha) * std::pow(Complex(x, 1.0), -beta);
        double sec2 = 1.0 + x * x;
        return val * sec2;
    };
    double s = std::max(0.0, 2.0 - (alpha.real() + beta.real()));
    Interval iv = Interval::finite(-kPi / 2, kPi / 2);
    iv.singular_lo(s).singular_hi(s);
    return integrate_adaptive(g, iv, spec).value;
}

Complex casselman_closed_form(Complex alpha, Complex beta) {
    return std::pow(2.0, 2.0 - alpha - beta) * std::pow(kI, alpha - beta) * gamma(alpha + beta - 1.0) *
           reciprocal_gamma(alpha) * reciprocal_gamma(beta);
}

Complex trig_integral_quad(Complex nu, double a, TrigKind kind, const QuadratureSpec& spec) {
    if (nu.real() <= 0.0) throw DomainError("trig integral: need Re nu > 0");
    auto g = [&](double x) -> Complex {
        Complex p = std::pow(Complex(std::sin(x), 0.0), nu - 1.0);
        switch (kind) {
            case TrigKind::cosine: return p * std::cos(a * x);
            case TrigKind::sine: return p * std::sin(a * x);
            default: return p * std::exp(kI * (a * x));
        }
    };
    double s = std::max(0.0, 1.0 - nu.real());
    Interval iv = Interval::finite(0.0, kPi);
    iv.singular_lo(s).singular_hi(s);
    return integrate_adaptive(g, iv, spec).value;
}

Complex trig_closed_form(Complex nu, double a, TrigKind kind) {
    Complex common = std::pow(2.0, 1.0 - nu) * kPi * gamma(nu) *
                     reciprocal_gamma((nu + 1.0 - a) / 2.0) * reciprocal_gamma((nu + 1.0 + a) / 2.0);
    switch (kind) {
        case TrigKind::cosine: return common * std::cos(a * kPi / 2);
        case TrigKind::sine: return common * std::sin(a * kPi / 2);
        default: return common * std::exp(kI * (a * kPi / 2));
    }
}

Complex power_integral_1_quad(double alpha, double beta, const QuadratureSpec& spec) {
    if (beta <= -1.0 || alpha + beta >= -1.0)
        throw DomainError("power integral 1: need Re beta > -1 and Re(alpha+beta) < -1");
    // x = 1/u: int_0^1 u^{-alpha-beta-2} (1-u)^beta du
    auto g = [&](double u) -> Complex {
        return std::pow(u, -alpha - beta - 2.0) * std::pow(1.0 - u, beta);
    };
    Interval iv = Interval::finite(0.0, 1.0);
    iv.singular_lo(std::max(0.0, alpha + beta + 2.0)).singular_hi(std::max(0.0, -beta));
    return integrate_adaptive(g, iv, spec).value;
}

Complex power_integral_1_closed(double alpha, double beta) {
    return gamma(Complex(-alpha - beta - 1.0, 0)) * gamma(Complex(beta + 1.0, 0)) *
           reciprocal_gamma(Complex(-alpha, 0));
}

Complex power_integral_2_quad(double alpha, double beta, const QuadratureSpec& spec) {
    if (alpha <= -1.0 || alpha + beta >= -1.0)
        throw DomainError("power integral 2: need Re alpha > -1 and Re(alpha+beta) < -1");
    // x = u/(1-u): int_0^1 u^alpha (1-u)^{-alpha-beta-2} du
    auto g = [&](double u) -> Complex {
        return std::pow(u, alpha) * std::pow(1.0 - u, -alpha - beta - 2.0);
    };
    Interval iv = Interval::finite(0.0, 1.0);
    iv.singular_lo(std::max(0.0, -alpha)).singular_hi(std::max(0.0, alpha + beta + 2.0));
    return integrate_adaptive(g, iv, spec).value;
}

Complex power_integral_2_closed(double alpha, double beta) {
    return gamma(Complex(-alpha - beta - 1.0, 0)) * gamma(Complex(alpha + 1.0, 0)) *
           reciprocal_gamma(Complex(-beta, 0));
}

std::vector<OracleRow> appendix_integral_oracles() {
    std::vector<OracleRow> rows;
    auto push = [&](const std::string& id, const std::string& params, Complex lhs, Complex rhs) {
        rows.push_back({id, params, lhs, rhs, lhs / rhs});
    };

    for (Complex ab : {Complex(1.0, 0.0), Complex(1.5, 0.3), Complex(2.0, -0.5), Complex(1.2, 0.0)}) {
        for (Complex bb : {Complex(1.0, 0.0), Complex(1.7, -0.3), Complex(2.5, 0.2)}) {
            std::ostringstream os;
            os << "alpha=" << ab << " beta=" << bb;
            push("casselman", os.str(), casselman_integral_quad(ab, bb), casselman_closed_form(ab, bb));
        }
    }
    for (double nu : {0.7, 1.3, 2.5}) {
        for (double a : {0.0, 0.8, 2.0}) {
            for (TrigKind k : {TrigKind::cosine, TrigKind::sine, TrigKind::exponential}) {
                const char* name = k == TrigKind::cosine  ? "3.631-cos"
                                   : k == TrigKind::sine ? "3.631-sin"
                                                         : "trig-exp";
                std::ostringstream os;
                os << "nu=" << nu << " a=" << a;
                Complex rhs = trig_closed_form(nu, a, k);
                if (std::abs(rhs) < 1e-14) continue;  // sine identity vanishes at a = 0
                push(name, os.str(), trig_integral_quad(nu, a, k), rhs);
            }
        }
    }
    for (auto [al, be] : {std::pair{-3.0, 0.0}, {-2.6, -0.5}, {-1.4, -0.3}, {-2.2, 0.4}}) {
        std::ostringstream os;
        os << "alpha=" << al << " beta=" << be;
        push("power-1", os.str(), power_integral_1_quad(al, be), power_integral_1_closed(al, be));
    }
    for (auto [al, be] : {std::pair{0.0, -2.0}, {-0.5, -1.2}, {0.7, -2.4}, {-0.2, -1.6}}) {
        std::ostringstream os;
        os << "alpha=" << al << " beta=" << be;
        push("power-2", os.str(), power_integral_2_quad(al, be), power_integral_2_closed(al, be));
    }
    return rows;
}

}  // namespace hyppl
